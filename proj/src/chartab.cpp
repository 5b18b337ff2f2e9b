#include "grc/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "grc/modular.hpp"

namespace grc {

namespace {

using modp::u64;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

/// Row-reduces in place and drops zero rows; pivots are normalised to 1.
std::vector<std::size_t> rref(Mat& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const u64 s = modp::inv(m[row][col], p);
    for (auto& x : m[row]) x = modp::mul(x, s, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (m[row][c] != 0) m[r][c] = modp::sub(m[r][c], modp::mul(f, m[row][c], p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Mat nullspace(Mat m, u64 p) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  const auto pivots = rref(m, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = modp::sub(0, m[r][free], p);
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial (low degree first, monic) via Hessenberg form.
Vec charpoly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    const u64 inv = modp::inv(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const u64 u = modp::mul(h[i][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[i][c] = modp::sub(h[i][c], modp::mul(u, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = modp::add(h[r][j + 1], modp::mul(u, h[r][i], p), p);
    }
  }
  std::vector<Vec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = polys[m - 1];
    const u64 hmm = h[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = modp::add(next[k + 1], prev[k], p);
      next[k] = modp::sub(next[k], modp::mul(hmm, prev[k], p), p);
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      t = modp::mul(t, h[i + 1][i], p);
      if (t == 0) break;
      const u64 coef = modp::mul(t, h[i][m - 1], p);
      if (coef == 0) continue;
      const Vec& q = polys[i];
      for (std::size_t k = 0; k < q.size(); ++k) next[k] = modp::sub(next[k], modp::mul(coef, q[k], p), p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

u64 poly_eval(const Vec& f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t k = f.size(); k-- > 0;) r = modp::add(modp::mul(r, x, p), f[k], p);
  return r;
}

struct Failed {};

std::vector<Character> dixon_at_prime(const Group& g, const ClassMultTensor& a, u64 p) {
  const ConjClasses& cl = g.classes();
  const std::size_t c = cl.count();
  const long e = g.exponent();

  std::vector<Mat> spaces;
  {
    Mat id(c, Vec(c, 0));
    for (std::size_t i = 0; i < c; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t i = 1; i < c; ++i) {
    std::vector<Mat> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<std::size_t> pivots(d);
      for (std::size_t r = 0; r < d; ++r) {
        pivots[r] = static_cast<std::size_t>(std::find_if(basis[r].begin(), basis[r].end(),
                                                          [](u64 x) { return x != 0; }) -
                                             basis[r].begin());
      }
      // m[s][r]: coordinate s of A_i b_r.
      Mat m(d, Vec(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
          const std::size_t j = pivots[s];
          u64 acc = 0;
          for (std::size_t k = 0; k < c; ++k) {
            if (basis[r][k] == 0) continue;
            const long v = a.at(i, j, k);
            if (v != 0) acc = modp::add(acc, modp::mul(static_cast<u64>(v) % p, basis[r][k], p), p);
          }
          m[s][r] = acc;
        }
      }
      bool scalar = true;
      for (std::size_t r = 0; r < d && scalar; ++r) {
        for (std::size_t s = 0; s < d && scalar; ++s) {
          if (m[r][s] != (r == s ? m[0][0] : 0)) scalar = false;
        }
      }
      if (scalar) {
        next.push_back(std::move(basis));
        continue;
      }
      const Vec f = charpoly(m, p);
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        if (poly_eval(f, lambda, p) != 0) continue;
        Mat shifted = m;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = modp::sub(shifted[r][r], lambda, p);
        Mat kernel = nullspace(std::move(shifted), p);
        Mat sub;
        for (const Vec& coef : kernel) {
          Vec v(c, 0);
          for (std::size_t r = 0; r < d; ++r) {
            if (coef[r] == 0) continue;
            for (std::size_t k = 0; k < c; ++k) v[k] = modp::add(v[k], modp::mul(coef[r], basis[r][k], p), p);
          }
          sub.push_back(std::move(v));
        }
        rref(sub, p);
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw Failed{};
    }
    spaces = std::move(next);
  }
  if (spaces.size() != c) throw Failed{};

  const u64 order_mod = g.order() % p;
  const u64 z = modp::pow(modp::primitive_root(p), (p - 1) / static_cast<u64>(e), p);
  const auto max_degree = static_cast<u64>(std::sqrt(static_cast<double>(g.order())) + 1);

  // Classes of the powers of each class representative.
  std::vector<std::vector<Index>> power_classes(c);
  for (std::size_t k = 0; k < c; ++k) {
    const Index x = cl.reps[k];
    const Index o = g.element_order(x);
    Index y = 0;
    for (Index j = 0; j < o; ++j) {
      power_classes[k].push_back(cl.class_of[y]);
      y = g.mult(y, x);
    }
  }

  std::vector<Character> out;
  for (const Mat& sp : spaces) {
    Vec omega = sp[0];
    if (omega[0] == 0) throw Failed{};
    const u64 s0 = modp::inv(omega[0], p);
    for (auto& w : omega) w = modp::mul(w, s0, p);
    u64 sum = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const u64 t = modp::mul(omega[k], omega[cl.inverse_class[k]], p);
      sum = modp::add(sum, modp::mul(t, modp::inv(cl.sizes[k] % p, p), p), p);
    }
    if (sum == 0) throw Failed{};
    const u64 dsq = modp::mul(order_mod, modp::inv(sum, p), p);
    u64 degree = 0;
    for (u64 d = 1; d <= max_degree; ++d) {
      if (d * d % p == dsq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Failed{};
    Vec theta(c);
    for (std::size_t k = 0; k < c; ++k) {
      theta[k] = modp::mul(modp::mul(degree, omega[k], p), modp::inv(cl.sizes[k] % p, p), p);
    }
    Character chi;
    chi.values.reserve(c);
    for (std::size_t k = 0; k < c; ++k) {
      const auto o = static_cast<long>(power_classes[k].size());
      const u64 w = modp::pow(z, static_cast<u64>(e / o), p);
      const u64 w_inv = modp::inv(w, p);
      const u64 o_inv = modp::inv(static_cast<u64>(o) % p, p);
      Cyclo value;
      u64 total = 0;
      for (long l = 0; l < o; ++l) {
        const u64 step = modp::pow(w_inv, static_cast<u64>(l), p);
        u64 acc = 0;
        u64 f = 1;
        for (long j = 0; j < o; ++j) {
          acc = modp::add(acc, modp::mul(theta[power_classes[k][static_cast<std::size_t>(j)]], f, p), p);
          f = modp::mul(f, step, p);
        }
        const u64 mult = modp::mul(acc, o_inv, p);
        if (mult > degree) throw Failed{};
        total += mult;
        if (mult != 0) value.add_scaled(Cyclo::root(o, l), Rational(static_cast<long>(mult)));
      }
      if (total != degree) throw Failed{};
      chi.values.push_back(value.compact());
    }
    out.push_back(std::move(chi));
  }
  return out;
}

bool is_trivial_row(const Character& chi) {
  return std::all_of(chi.values.begin(), chi.values.end(), [](const Cyclo& v) { return v == Cyclo(1); });
}

/// Degree, then coordinates of the values over Q(z_e).
struct CanonicalLess {
  long e;
  bool operator()(const Character& a, const Character& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      const Cyclo x = a.values[k].lift(e);
      const Cyclo y = b.values[k].lift(e);
      for (std::size_t i = 0; i < x.coords().size(); ++i) {
        const int r = cmp(x.coords()[i], y.coords()[i]);
        if (r != 0) return r < 0;
      }
    }
    return false;
  }
};

}  // namespace

ClassMultTensor::ClassMultTensor(const Group& g) : c_(g.classes().count()), a_(c_ * c_ * c_, 0) {
  const ConjClasses& cl = g.classes();
  for (std::size_t i = 0; i < c_; ++i) {
    for (Index x : cl.members[i]) {
      const Index xi = g.inv(x);
      for (std::size_t k = 0; k < c_; ++k) {
        const Index y = g.mult(xi, cl.reps[k]);
        ++a_[(i * c_ + cl.class_of[y]) * c_ + k];
      }
    }
  }
}

ClassMultTensor class_mult_coefficients(const Group& g) { return ClassMultTensor(g); }

std::uint64_t dixon_prime(std::size_t order, long exponent) {
  auto root = static_cast<u64>(std::sqrt(static_cast<double>(order)));
  while (root * root < order) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= order) --root;
  const u64 bound = 2 * root;
  const auto e = static_cast<u64>(exponent);
  u64 p = e + 1;
  while (p <= bound || !modp::is_prime(p)) p += e;
  return p;
}

CharacterTable dixon_table(const GroupPtr& g) {
  const ClassMultTensor a(*g);
  const auto e = static_cast<u64>(g->exponent());
  u64 p = dixon_prime(g->order(), g->exponent());
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      auto rows = dixon_at_prime(*g, a, p);
      sort_canonical(rows, g->exponent());
      return CharacterTable(g, std::move(rows));
    } catch (const Failed&) {
      do p += e;
      while (!modp::is_prime(p));
    }
  }
  throw std::runtime_error("character table computation failed for " + g->name());
}

namespace {

using Wide = __int128;

/// Values as integer vectors over Z[x]/(x^e - 1); null when a value is not integral.
std::optional<std::vector<std::vector<std::vector<long long>>>> integral_values(
    const Group& g, std::span<const Character> rows) {
  const long e = g.exponent();
  std::vector<std::vector<std::vector<long long>>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& v : rows[r].values) {
      if (e % v.conductor() != 0) return std::nullopt;
      const Cyclo lifted = v.lift(e);
      std::vector<long long> w(static_cast<std::size_t>(e), 0);
      for (std::size_t i = 0; i < lifted.coords().size(); ++i) {
        const Rational& x = lifted.coords()[i];
        if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return std::nullopt;
        w[i] = x.get_num().get_si();
      }
      out[r].push_back(std::move(w));
    }
  }
  return out;
}

void add_product(std::vector<Wide>& acc, const std::vector<long long>& a, const std::vector<long long>& b,
                 long long scale) {
  const std::size_t e = acc.size();
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    const Wide ai = static_cast<Wide>(a[i]) * scale;
    for (std::size_t j = 0; j < e; ++j) {
      if (b[j] != 0) acc[(i + j) % e] += ai * b[j];
    }
  }
}

/// Whether acc, reduced modulo the e-th cyclotomic polynomial, is the constant c.
bool equals_constant(std::vector<Wide> acc, long e, Wide c) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = acc.size(); k-- > deg;) {
    if (acc[k] == 0) continue;
    const Wide t = acc[k];
    for (std::size_t j = 0; j <= deg; ++j) acc[k - deg + j] -= t * phi[j];
  }
  if (acc[0] != c) return false;
  for (std::size_t k = 1; k < deg; ++k) {
    if (acc[k] != 0) return false;
  }
  return true;
}

/// Image of v under x -> x^-1.
std::vector<long long> conj_vec(const std::vector<long long>& v) {
  const std::size_t e = v.size();
  std::vector<long long> out(e, 0);
  for (std::size_t i = 0; i < e; ++i) out[(e - i) % e] = v[i];
  return out;
}

}  // namespace

bool rows_orthogonal(const Group& g, std::span<const Character> rows) {
  const ConjClasses& cl = g.classes();
  const auto ints = integral_values(g, rows);
  if (!ints) {
    const Rational order(static_cast<long>(g.order()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a; b < rows.size(); ++b) {
        Cyclo s;
        for (std::size_t k = 0; k < cl.count(); ++k) {
          s.add_scaled(rows[a].values[k] * rows[b].values[k].conj(), Rational(static_cast<long>(cl.sizes[k])));
        }
        if (!(s == Cyclo(a == b ? order : Rational(0)))) return false;
      }
    }
    return true;
  }
  const long e = g.exponent();
  std::vector<std::vector<std::vector<long long>>> conjugates(rows.size());
  for (std::size_t b = 0; b < rows.size(); ++b) {
    for (const auto& v : (*ints)[b]) conjugates[b].push_back(conj_vec(v));
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a; b < rows.size(); ++b) {
      std::vector<Wide> acc(static_cast<std::size_t>(e), 0);
      for (std::size_t k = 0; k < cl.count(); ++k) {
        add_product(acc, (*ints)[a][k], conjugates[b][k], static_cast<long long>(cl.sizes[k]));
      }
      if (!equals_constant(std::move(acc), e, a == b ? static_cast<Wide>(g.order()) : 0)) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const Group& g, std::span<const Character> rows) {
  const ConjClasses& cl = g.classes();
  const auto ints = integral_values(g, rows);
  if (!ints) {
    for (std::size_t i = 0; i < cl.count(); ++i) {
      for (std::size_t j = i; j < cl.count(); ++j) {
        Cyclo s;
        for (const auto& chi : rows) s += chi.values[i] * chi.values[j].conj();
        const Rational want = i == j ? Rational(static_cast<long>(g.order() / cl.sizes[i])) : Rational(0);
        if (!(s == Cyclo(want))) return false;
      }
    }
    return true;
  }
  const long e = g.exponent();
  std::vector<std::vector<std::vector<long long>>> conjugates(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& v : (*ints)[r]) conjugates[r].push_back(conj_vec(v));
  }
  for (std::size_t i = 0; i < cl.count(); ++i) {
    for (std::size_t j = i; j < cl.count(); ++j) {
      std::vector<Wide> acc(static_cast<std::size_t>(e), 0);
      for (std::size_t r = 0; r < rows.size(); ++r) add_product(acc, (*ints)[r][i], conjugates[r][j], 1);
      const Wide want = i == j ? static_cast<Wide>(g.order() / cl.sizes[i]) : 0;
      if (!equals_constant(std::move(acc), e, want)) return false;
    }
  }
  return true;
}

void sort_canonical(std::vector<Character>& rows, long exponent) {
  std::stable_sort(rows.begin(), rows.end(), CanonicalLess{exponent});
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  const std::size_t c = group_->classes().count();
  if (rows_.size() != c) throw OrthogonalityError("table has the wrong number of rows");
  for (const auto& r : rows_) {
    if (r.values.size() != c) throw OrthogonalityError("table row has the wrong number of values");
    for (const auto& v : r.values) {
      if (v.conductor() == 0 || group_->exponent() % v.conductor() != 0) {
        throw OrthogonalityError("table value outside Q(z_e)");
      }
      const Cyclo lifted = v.lift(group_->exponent());
      for (const auto& x : lifted.coords()) {
        if (x.get_den() != 1) throw OrthogonalityError("table value is not an algebraic integer");
      }
    }
    if (!r.values[0].is_rational() || sgn(r.values[0].to_rational()) <= 0 ||
        r.values[0].to_rational().get_den() != 1) {
      throw OrthogonalityError("table row has a non-positive degree");
    }
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (is_trivial_row(rows_[i])) trivial_ = i;
  }
  if (!rows_orthogonal(*group_, rows_)) throw OrthogonalityError("row orthogonality fails");
  if (!columns_orthogonal(*group_, rows_)) throw OrthogonalityError("column orthogonality fails");
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& values) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].values == values) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> CharacterTable::galois_permutation(long k) const {
  const long e = exponent();
  std::vector<std::size_t> perm(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    ClassFunction img;
    img.reserve(rows_[i].values.size());
    for (const auto& v : rows_[i].values) img.push_back(v.lift(e).galois(k).compact());
    const auto j = find(img);
    if (!j) throw std::logic_error("Galois image is not a row of the table");
    perm[i] = *j;
  }
  return perm;
}

std::size_t CharacterTable::trivial() const { return trivial_; }

std::vector<long> CharacterTable::degrees() const {
  std::vector<long> out;
  for (const auto& r : rows_) out.push_back(r.degree());
  return out;
}

}  // namespace grc
