#include "grc/groupring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace grc {

namespace {

bool coeff_is_zero(const Rational& x) { return sgn(x) == 0; }
bool coeff_is_zero(const Cyclo& x) { return x.is_zero(); }

std::string coeff_string(const Rational& x) { return x.get_str(); }
std::string coeff_string(const Cyclo& x) {
  const std::string s = x.to_string();
  return x.is_rational() ? s : "(" + s + ")";
}

template <class K>
std::string format_terms(const GroupRingElement<K>& x, bool words) {
  std::ostringstream out;
  bool first = true;
  for (Index g = 0; g < x.size(); ++g) {
    if (coeff_is_zero(x[g])) continue;
    if (!first) out << " + ";
    first = false;
    out << coeff_string(x[g]) << " * ";
    if (words) {
      out << x.group()->word(g);
    } else {
      out << 'g' << g;
    }
  }
  if (first) return "0";
  return out.str();
}

void check_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b) throw std::invalid_argument("group ring operands belong to different groups");
}

/// Product in Q[G] through integer numerators over a common denominator.
QElement multiply_rational(const QElement& a, const QElement& b) {
  const Group& g = *a.group();
  const std::size_t n = g.order();
  const auto table = g.cayley_table();
  Integer da = 1;
  Integer db = 1;
  std::vector<Index> sa;
  std::vector<Index> sb;
  for (Index x = 0; x < n; ++x) {
    if (sgn(a[x]) != 0) {
      sa.push_back(x);
      mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), a[x].get_den_mpz_t());
    }
    if (sgn(b[x]) != 0) {
      sb.push_back(x);
      mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), b[x].get_den_mpz_t());
    }
  }
  QElement out(a.group());
  if (sa.empty() || sb.empty()) return out;

  std::vector<Integer> na(sa.size());
  std::vector<Integer> nb(sb.size());
  Integer max_a = 0;
  Integer max_b = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    na[i] = a[sa[i]].get_num() * (da / a[sa[i]].get_den());
    if (abs(na[i]) > max_a) max_a = abs(na[i]);
  }
  for (std::size_t j = 0; j < sb.size(); ++j) {
    nb[j] = b[sb[j]].get_num() * (db / b[sb[j]].get_den());
    if (abs(nb[j]) > max_b) max_b = abs(nb[j]);
  }
  const Integer bound = max_a * max_b * static_cast<unsigned long>(std::min(sa.size(), sb.size()));
  const Integer den = da * db;
  auto product = [&](Index x, Index y) -> Index {
    return table.empty() ? g.mult(x, y) : table[static_cast<std::size_t>(x) * n + y];
  };

  if (bound < Integer(static_cast<long>(std::numeric_limits<long>::max() / 2))) {
    std::vector<long long> ia(sa.size());
    std::vector<long long> ib(sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i) ia[i] = na[i].get_si();
    for (std::size_t j = 0; j < sb.size(); ++j) ib[j] = nb[j].get_si();
    std::vector<long long> acc(n, 0);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      const std::size_t row = static_cast<std::size_t>(sa[i]) * n;
      for (std::size_t j = 0; j < sb.size(); ++j) {
        const Index z = table.empty() ? g.mult(sa[i], sb[j]) : table[row + sb[j]];
        acc[z] += ia[i] * ib[j];
      }
    }
    for (Index z = 0; z < n; ++z) {
      if (acc[z] == 0) continue;
      out[z] = Rational(Integer(static_cast<long>(acc[z])), den);
      out[z].canonicalize();
    }
    return out;
  }
  std::vector<Integer> acc(n);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    for (std::size_t j = 0; j < sb.size(); ++j) acc[product(sa[i], sb[j])] += na[i] * nb[j];
  }
  for (Index z = 0; z < n; ++z) {
    if (sgn(acc[z]) == 0) continue;
    out[z] = Rational(acc[z], den);
    out[z].canonicalize();
  }
  return out;
}

KElement multiply_cyclo(const KElement& a, const KElement& b) {
  const Group& g = *a.group();
  KElement out(a.group());
  std::vector<Index> sb;
  for (Index y = 0; y < g.order(); ++y) {
    if (!b[y].is_zero()) sb.push_back(y);
  }
  for (Index x = 0; x < g.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (Index y : sb) out[g.mult(x, y)] += a[x] * b[y];
  }
  for (Index z = 0; z < g.order(); ++z) out[z] = out[z].compact();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupRingElement

template <class K>
GroupRingElement<K>::GroupRingElement(GroupPtr g) : group_(std::move(g)), coeffs_(group_->order()) {}

template <class K>
GroupRingElement<K> GroupRingElement<K>::basis(GroupPtr g, Index x, const K& c) {
  GroupRingElement r(std::move(g));
  r.coeffs_.at(x) = c;
  return r;
}

template <class K>
bool GroupRingElement<K>::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const K& c) { return coeff_is_zero(c); });
}

template <class K>
GroupRingElement<K>& GroupRingElement<K>::operator+=(const GroupRingElement& o) {
  check_same_group(group_, o.group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeff_is_zero(o.coeffs_[i])) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

template <class K>
GroupRingElement<K>& GroupRingElement<K>::operator-=(const GroupRingElement& o) {
  check_same_group(group_, o.group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeff_is_zero(o.coeffs_[i])) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

template <class K>
GroupRingElement<K>& GroupRingElement<K>::operator*=(const K& scalar) {
  for (auto& c : coeffs_) {
    if (!coeff_is_zero(c)) c *= scalar;
  }
  return *this;
}

template <class K>
GroupRingElement<K> GroupRingElement<K>::operator-() const {
  GroupRingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

template <class K>
GroupRingElement<K> GroupRingElement<K>::multiply(const GroupRingElement& a, const GroupRingElement& b) {
  check_same_group(a.group_, b.group_);
  if constexpr (std::is_same_v<K, Rational>) {
    return multiply_rational(a, b);
  } else {
    return multiply_cyclo(a, b);
  }
}

template <class K>
std::string GroupRingElement<K>::to_string() const {
  return format_terms(*this, false);
}

template <class K>
std::string GroupRingElement<K>::to_words() const {
  return format_terms(*this, true);
}

template class GroupRingElement<Rational>;
template class GroupRingElement<Cyclo>;

KElement to_cyclo(const QElement& x) {
  KElement r(x.group());
  for (Index g = 0; g < x.size(); ++g) {
    if (sgn(x[g]) != 0) r[g] = Cyclo(x[g]);
  }
  return r;
}

std::optional<QElement> to_rational(const KElement& x) {
  QElement r(x.group());
  for (Index g = 0; g < x.size(); ++g) {
    if (!x[g].is_rational()) return std::nullopt;
    r[g] = x[g].to_rational();
  }
  return r;
}

Integer denominator(const QElement& x) { return denominator_lcm(x.coeffs()); }

bool is_integral(const QElement& x) { return denominator(x) == 1; }

QElement parse_element_literal(const GroupPtr& g, std::string_view text) {
  QElement r(g);
  std::string s(text);
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty element literal");
  s = s.substr(b, s.find_last_not_of(" \t") - b + 1);
  if (s == "0") return r;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    std::string term = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    term.erase(std::remove_if(term.begin(), term.end(), [](unsigned char c) { return std::isspace(c); }),
               term.end());
    if (term.empty()) throw ParseError("empty term in element literal '" + std::string(text) + "'");
    const auto colon = term.find(':');
    Rational c(1);
    std::string word = term;
    if (colon != std::string::npos) {
      c = parse_rational(term.substr(0, colon));
      word = term.substr(colon + 1);
    }
    Index x = 0;
    try {
      x = g->parse_element(word);
    } catch (const GroupError& e) {
      throw ParseError(e.what());
    }
    r[x] += c;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// GroupRingMatrix

template <class K>
GroupRingMatrix<K>::GroupRingMatrix(GroupPtr g, std::size_t n) : group_(std::move(g)), n_(n) {
  entries_.assign(n * n, Element(group_));
}

template <class K>
GroupRingMatrix<K> GroupRingMatrix<K>::identity(GroupPtr g, std::size_t n) {
  GroupRingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Element::one(g);
  return m;
}

template <class K>
GroupRingMatrix<K> GroupRingMatrix<K>::scalar(const Element& x, std::size_t n) {
  GroupRingMatrix m(x.group(), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = x;
  return m;
}

template <class K>
GroupRingMatrix<K>& GroupRingMatrix<K>::operator+=(const GroupRingMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix sizes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

template <class K>
GroupRingMatrix<K>& GroupRingMatrix<K>::operator-=(const GroupRingMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix sizes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

template <class K>
GroupRingMatrix<K> GroupRingMatrix<K>::multiply(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix sizes differ");
  check_same_group(a.group_, b.group_);
  const std::size_t n = a.n_;
  GroupRingMatrix r(a.group_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Element& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Element& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

template <class K>
GroupRingMatrix<K> GroupRingMatrix<K>::scale_left(const Element& x, const GroupRingMatrix& m) {
  GroupRingMatrix r(m.group_, m.n_);
  for (std::size_t i = 0; i < m.entries_.size(); ++i) {
    if (!m.entries_[i].is_zero()) r.entries_[i] = x * m.entries_[i];
  }
  return r;
}

template class GroupRingMatrix<Rational>;
template class GroupRingMatrix<Cyclo>;

KMatrix to_cyclo(const QMatrix& m) {
  KMatrix r(m.group(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) r.at(i, j) = to_cyclo(m.at(i, j));
  }
  return r;
}

Integer denominator(const QMatrix& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Integer e = denominator(m.at(i, j));
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
    }
  }
  return d;
}

bool is_integral(const QMatrix& m) { return denominator(m) == 1; }

QMatrix parse_matrix_literal(const GroupPtr& g, std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::string s(text);
  std::size_t pos = 0;
  while (true) {
    const auto semi = s.find(';', pos);
    const std::string row = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    std::vector<std::string> cells;
    std::size_t p = 0;
    while (true) {
      const auto bar = row.find('|', p);
      cells.push_back(row.substr(p, bar == std::string::npos ? std::string::npos : bar - p));
      if (bar == std::string::npos) break;
      p = bar + 1;
    }
    rows.push_back(std::move(cells));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  const std::size_t n = rows.size();
  QMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ParseError("matrix literal is not square");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_element_literal(g, rows[i][j]);
  }
  return m;
}

std::string format_element(const QElement& x) {
  std::string out;
  for (Index g = 0; g < x.size(); ++g) {
    if (sgn(x[g]) == 0) continue;
    if (!out.empty()) out += ", ";
    out += to_string(x[g]) + ":" + x.group()->word(g);
  }
  return out.empty() ? "0" : out;
}

std::string format_matrix(const QMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += "|";
      out += format_element(m.at(i, j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Traces and reduced characteristic polynomials

namespace {

template <class K>
std::vector<K> class_totals(const GroupRingElement<K>& x) {
  const ConjClasses& cl = x.group()->classes();
  std::vector<K> out(cl.count());
  for (Index g = 0; g < x.size(); ++g) {
    if (!coeff_is_zero(x[g])) out[cl.class_of[g]] += x[g];
  }
  return out;
}

template <class K>
Cyclo pair_with(const Character& chi, const std::vector<K>& totals) {
  Cyclo s;
  for (std::size_t c = 0; c < totals.size(); ++c) {
    if (coeff_is_zero(totals[c]) || chi.values[c].is_zero()) continue;
    s += chi.values[c] * totals[c];
  }
  return s.compact();
}

void check_table(const CharacterTable& t, const GroupPtr& g) {
  if (t.group() != g) throw std::invalid_argument("character table belongs to a different group");
}

/// Powers H^0 .. H^top of h together with their diagonal class totals.
template <class K>
struct PowerData {
  std::vector<GroupRingMatrix<K>> powers;
  std::vector<std::vector<K>> trace_totals;  // [k][class], k >= 1
};

template <class K>
PowerData<K> compute_powers(const GroupRingMatrix<K>& h, std::size_t top) {
  PowerData<K> d;
  d.powers.push_back(GroupRingMatrix<K>::identity(h.group(), h.size()));
  d.trace_totals.emplace_back();
  for (std::size_t k = 1; k <= top; ++k) {
    d.powers.push_back(k == 1 ? h : d.powers.back() * h);
    const auto& p = d.powers.back();
    std::vector<K> tot(h.group()->classes().count());
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto part = class_totals(p.at(i, i));
      for (std::size_t c = 0; c < tot.size(); ++c) tot[c] += part[c];
    }
    d.trace_totals.push_back(std::move(tot));
  }
  return d;
}

template <class K>
RedCharPoly newton(const CharacterTable& t, const PowerData<K>& d, std::size_t n, std::size_t chi) {
  const auto m = static_cast<std::size_t>(t[chi].degree()) * n;
  std::vector<Cyclo> p(m + 1);
  for (std::size_t k = 1; k <= m; ++k) p[k] = pair_with(t[chi], d.trace_totals[k]);
  // e_k = (1/k) sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
  std::vector<Cyclo> e(m + 1);
  e[0] = Cyclo(1);
  for (std::size_t k = 1; k <= m; ++k) {
    Cyclo s;
    for (std::size_t i = 1; i <= k; ++i) {
      if (e[k - i].is_zero() || p[i].is_zero()) continue;
      s.add_scaled(e[k - i] * p[i], Rational(i % 2 == 1 ? 1 : -1));
    }
    s *= Rational(1, static_cast<long>(k));
    e[k] = s.compact();
  }
  RedCharPoly f;
  f.chi = chi;
  f.coeffs.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    f.coeffs[j] = (m - j) % 2 == 0 ? e[m - j] : -e[m - j];
  }
  return f;
}

std::size_t max_degree(const CharacterTable& t) {
  long d = 1;
  for (const auto& r : t.rows()) d = std::max(d, r.degree());
  return static_cast<std::size_t>(d);
}

template <class K>
std::vector<RedCharPoly> all_polys(const CharacterTable& t, const PowerData<K>& d, std::size_t n) {
  std::vector<RedCharPoly> out;
  for (std::size_t chi = 0; chi < t.size(); ++chi) out.push_back(newton(t, d, n, chi));
  return out;
}

std::vector<Cyclo> norms_from(const std::vector<RedCharPoly>& polys) {
  std::vector<Cyclo> out;
  for (const auto& f : polys) {
    const std::size_t m = f.degree();
    out.push_back(m % 2 == 0 ? f.coeffs[0] : -f.coeffs[0]);
  }
  return out;
}

}  // namespace

Cyclo chi_trace(const CharacterTable& t, std::size_t chi, const QElement& x) {
  check_table(t, x.group());
  return pair_with(t[chi], class_totals(x));
}

Cyclo chi_trace(const CharacterTable& t, std::size_t chi, const KElement& x) {
  check_table(t, x.group());
  return pair_with(t[chi], class_totals(x));
}

RedCharPoly reduced_char_poly(const CharacterTable& t, const QMatrix& h, std::size_t chi) {
  check_table(t, h.group());
  const auto d = compute_powers(h, h.size() * static_cast<std::size_t>(t[chi].degree()));
  return newton(t, d, h.size(), chi);
}

RedCharPoly reduced_char_poly(const CharacterTable& t, const KMatrix& h, std::size_t chi) {
  check_table(t, h.group());
  const auto d = compute_powers(h, h.size() * static_cast<std::size_t>(t[chi].degree()));
  return newton(t, d, h.size(), chi);
}

std::vector<RedCharPoly> reduced_char_polys(const CharacterTable& t, const QMatrix& h) {
  check_table(t, h.group());
  return all_polys(t, compute_powers(h, h.size() * max_degree(t)), h.size());
}

std::vector<RedCharPoly> reduced_char_polys(const CharacterTable& t, const KMatrix& h) {
  check_table(t, h.group());
  return all_polys(t, compute_powers(h, h.size() * max_degree(t)), h.size());
}

CentralElement reduced_norm(const CharacterTable& t, const QMatrix& h) {
  return CentralElement(t, norms_from(reduced_char_polys(t, h)));
}

CentralElement reduced_norm(const CharacterTable& t, const KMatrix& h) {
  return CentralElement(t, norms_from(reduced_char_polys(t, h)));
}

NormAndAdjoint norm_and_adjoint(const CharacterTable& t, const QMatrix& h) {
  check_table(t, h.group());
  const std::size_t n = h.size();
  const std::size_t top = n * max_degree(t);
  const auto d = compute_powers(h, top);
  const auto polys = all_polys(t, d, n);
  // H* = sum_{j>=1} Z_j H^(j-1), Z_j = sum_chi [j <= m_chi] (-1)^(m_chi+1) alpha_{chi,j} e_chi
  QMatrix adj(h.group(), n);
  for (std::size_t j = 1; j <= top; ++j) {
    std::vector<Cyclo> comps(t.size());
    bool any = false;
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      const std::size_t m = polys[chi].degree();
      if (j > m || polys[chi].coeffs[j].is_zero()) continue;
      comps[chi] = m % 2 == 1 ? polys[chi].coeffs[j] : -polys[chi].coeffs[j];
      any = true;
    }
    if (!any) continue;
    const CentralElement z(t, std::move(comps));
    if (!z.is_galois_stable()) throw std::logic_error("adjoint coefficient is not rational");
    adj += z.to_element() * d.powers[j - 1];
  }
  return {CentralElement(t, norms_from(polys)), std::move(adj)};
}

QMatrix generalized_adjoint(const CharacterTable& t, const QMatrix& h) { return norm_and_adjoint(t, h).adjoint; }

// ---------------------------------------------------------------------------
// Central elements

CentralElement::CentralElement(const CharacterTable& t, std::vector<Cyclo> components)
    : group_(t.group()), components_(std::move(components)) {
  if (components_.size() != t.size()) throw std::invalid_argument("one component per character expected");
  for (auto& c : components_) c = c.compact();
  const ConjClasses& cl = t.classes();
  const Rational order(static_cast<long>(group_->order()));
  std::vector<Rational> coords(cl.count());
  for (std::size_t i = 0; i < cl.count(); ++i) {
    Cyclo s;
    const std::size_t inv = cl.inverse_class[i];
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      if (components_[chi].is_zero() || t[chi].values[inv].is_zero()) continue;
      s.add_scaled(components_[chi] * t[chi].values[inv], Rational(t[chi].degree()));
    }
    if (!s.is_rational()) return;
    coords[i] = s.to_rational() / order;
  }
  class_sums_ = std::move(coords);
}

CentralElement CentralElement::from_class_sums(const CharacterTable& t, std::span<const Rational> coords) {
  const ConjClasses& cl = t.classes();
  if (coords.size() != cl.count()) throw std::invalid_argument("one coordinate per class expected");
  std::vector<Cyclo> comps(t.size());
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    Cyclo s;
    for (std::size_t i = 0; i < cl.count(); ++i) {
      if (sgn(coords[i]) == 0) continue;
      s.add_scaled(t[chi].values[i], coords[i] * static_cast<long>(cl.sizes[i]));
    }
    s *= Rational(1, t[chi].degree());
    comps[chi] = s;
  }
  return CentralElement(t, std::move(comps));
}

CentralElement CentralElement::one(const CharacterTable& t) {
  return CentralElement(t, std::vector<Cyclo>(t.size(), Cyclo(1)));
}

const std::vector<Rational>& CentralElement::class_sums() const {
  if (!class_sums_) throw std::domain_error("central element is not Galois-stable");
  return *class_sums_;
}

QElement CentralElement::to_element() const {
  const auto& coords = class_sums();
  const ConjClasses& cl = group_->classes();
  QElement x(group_);
  for (std::size_t i = 0; i < cl.count(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (Index g : cl.members[i]) x[g] = coords[i];
  }
  return x;
}

std::string CentralElement::to_string() const {
  if (!class_sums_) {
    std::ostringstream out;
    out << "components(";
    for (std::size_t i = 0; i < components_.size(); ++i) out << (i ? " ; " : " ") << components_[i];
    out << " )";
    return out.str();
  }
  Integer d = denominator_lcm(std::span<const Rational>(*class_sums_));
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < class_sums_->size(); ++i) {
    const Rational c = (*class_sums_)[i] * d;
    if (sgn(c) == 0) continue;
    const Integer k = abs(c.get_num());
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    if (first && sgn(c) < 0) out << "-";
    if (k != 1) out << k.get_str();
    out << "C" << i + 1;
    first = false;
  }
  if (first) return "0";
  if (d == 1) return out.str();
  return "(1/" + d.get_str() + ")(" + out.str() + ")";
}

nlohmann::json CentralElement::to_json() const {
  nlohmann::json j;
  const ConjClasses& cl = group_->classes();
  j["class_reps"] = nlohmann::json::array();
  for (Index r : cl.reps) j["class_reps"].push_back(group_->word(r));
  if (class_sums_) {
    j["coords"] = nlohmann::json::array();
    for (const auto& c : *class_sums_) j["coords"].push_back(c.get_str());
    j["denominator"] = denominator_lcm(*class_sums_).get_str();
  } else {
    j["components"] = nlohmann::json::array();
    for (const auto& c : components_) j["components"].push_back(c.to_string());
    j["coords"] = nullptr;
    j["denominator"] = nullptr;
  }
  return j;
}

std::vector<Rational> central_to_classsums(const CentralElement& z) { return z.class_sums(); }

KElement idempotent(const CharacterTable& t, std::size_t chi) {
  const Group& g = *t.group();
  const ConjClasses& cl = g.classes();
  KElement e(t.group());
  Rational scale(t[chi].degree(), static_cast<long>(g.order()));
  scale.canonicalize();
  for (Index x = 0; x < g.order(); ++x) {
    e[x] = (t[chi].values[cl.inverse_class[cl.class_of[x]]] * scale).compact();
  }
  return e;
}

CentralElement E_d(const CharacterTable& t, long d) {
  std::vector<Cyclo> comps(t.size());
  for (std::size_t chi = 0; chi < t.size(); ++chi) comps[chi] = Cyclo(t[chi].degree() == d ? 1 : 0);
  return CentralElement(t, std::move(comps));
}

IntegralityReport integrality_report(const CentralElement& z) {
  IntegralityReport r;
  r.denominator = denominator_lcm(z.class_sums());
  r.is_central_integral = r.denominator == 1;
  return r;
}

}  // namespace grc
