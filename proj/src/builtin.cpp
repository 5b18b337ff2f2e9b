#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <string>

#include "grc/group.hpp"

namespace grc {

namespace {

Perm cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> cycle) {
  Perm p = perm_identity(degree);
  std::vector<std::uint32_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

Perm long_cycle(std::size_t degree, std::uint32_t first, std::uint32_t last) {
  Perm p = perm_identity(degree);
  for (std::uint32_t i = first; i < last; ++i) p[i] = i + 1;
  p[last] = first;
  return p;
}

struct Spec {
  std::vector<Perm> gens;
  std::vector<std::string> names;
};

Spec cyclic(std::size_t n) {
  if (n == 1) return {};
  return {{long_cycle(n, 0, static_cast<std::uint32_t>(n - 1))}, {"c"}};
}

Spec symmetric(std::size_t n) {
  if (n > 8) throw GroupError("S_n is provided for n <= 8");
  if (n <= 1) return {};
  Spec s{{cycle_perm(n, {0, 1})}, {"t"}};
  if (n >= 3) {
    s.gens.push_back(long_cycle(n, 0, static_cast<std::uint32_t>(n - 1)));
    s.names.emplace_back("s");
  }
  return s;
}

Spec alternating(std::size_t n) {
  if (n > 8) throw GroupError("A_n is provided for n <= 8");
  if (n <= 2) return {};
  Spec s{{cycle_perm(n, {0, 1, 2})}, {"u"}};
  if (n >= 4) {
    const auto last = static_cast<std::uint32_t>(n - 1);
    s.gens.push_back(n % 2 == 1 ? long_cycle(n, 0, last) : long_cycle(n, 1, last));
    s.names.emplace_back("v");
  }
  return s;
}

// Dihedral group of order 2n, <a, x | a^n = x^2 = 1, xax = a^-1>.
Spec dihedral(std::size_t n) {
  if (n == 0) throw GroupError("D_0 is not a group");
  if (n == 1) return {{perm_identity(2), cycle_perm(2, {0, 1})}, {"a", "x"}};
  if (n == 2) {
    Perm a{1, 0, 3, 2};
    Perm x{2, 3, 0, 1};
    return {{a, x}, {"a", "x"}};
  }
  Perm a(n);
  Perm x(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<std::uint32_t>((i + 1) % n);
    x[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return {{a, x}, {"a", "x"}};
}

// Left regular action of the unit quaternions {+-1, +-i, +-j, +-k}.
Spec quaternion() {
  // unit u in 0..3 = 1,i,j,k; element index = 2*u + (negative ? 1 : 0)
  static constexpr std::array<std::array<int, 4>, 4> unit{{
      {{0, 1, 2, 3}},
      {{1, 0, 3, 2}},
      {{2, 3, 0, 1}},
      {{3, 2, 1, 0}},
  }};
  static constexpr std::array<std::array<int, 4>, 4> sign{{
      {{1, 1, 1, 1}},
      {{1, -1, 1, -1}},
      {{1, -1, -1, 1}},
      {{1, 1, -1, -1}},
  }};
  auto left = [&](int q) {
    Perm p(8);
    for (int y = 0; y < 8; ++y) {
      const int u = unit[q / 2][y / 2];
      int s = sign[q / 2][y / 2];
      if (q % 2) s = -s;
      if (y % 2) s = -s;
      p[y] = static_cast<std::uint32_t>(2 * u + (s < 0 ? 1 : 0));
    }
    return p;
  };
  return {{left(2), left(4)}, {"i", "j"}};
}

// SL_2(F_3) acting on the eight non-zero column vectors of F_3^2.
Spec special_linear_2_3() {
  using Mat = std::array<int, 4>;  // row-major 2x2
  auto vec_index = [](int v0, int v1) { return v0 * 3 + v1; };
  std::vector<int> point_of(9, -1);
  int next = 0;
  for (int v = 1; v < 9; ++v) point_of[v] = next++;
  auto act = [&](const Mat& m) {
    Perm p(8);
    for (int v0 = 0; v0 < 3; ++v0) {
      for (int v1 = 0; v1 < 3; ++v1) {
        if (v0 == 0 && v1 == 0) continue;
        const int w0 = ((m[0] * v0 + m[1] * v1) % 3 + 3) % 3;
        const int w1 = ((m[2] * v0 + m[3] * v1) % 3 + 3) % 3;
        p[point_of[vec_index(v0, v1)]] = static_cast<std::uint32_t>(point_of[vec_index(w0, w1)]);
      }
    }
    return p;
  };
  const Mat alpha{0, -1, 1, 0};
  const Mat beta{1, 1, 1, -1};
  const Mat gamma{1, 1, 0, 1};
  return {{act(alpha), act(beta), act(gamma)}, {"alpha", "beta", "gamma"}};
}

// Finite field of order q = p^k as a multiplication table on 0..q-1, where
// element index is the base-p digit vector of the residue polynomial.
struct FiniteField {
  int p = 0;
  int q = 0;
  std::vector<int> add;
  std::vector<int> mul;
  int primitive = 0;
};

FiniteField finite_field(int q) {
  int p = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  for (int r = q; r > 1; r /= p) {
    if (r % p != 0) throw GroupError("Aff(q) needs a prime power q");
    ++k;
  }
  auto digits = [&](int x) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, x /= p) d[static_cast<std::size_t>(i)] = x % p;
    return d;
  };
  auto number = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p + d[static_cast<std::size_t>(i)];
    return x;
  };
  // try monic modulus x^k + f(x) for f in lexicographic order until a field results
  for (int f = 0; f < q; ++f) {
    const std::vector<int> low = digits(f);
    FiniteField F{p, q, std::vector<int>(static_cast<std::size_t>(q * q)),
                  std::vector<int>(static_cast<std::size_t>(q * q)), 0};
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        const auto da = digits(a);
        const auto db = digits(b);
        std::vector<int> s(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
          s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
        }
        F.add[static_cast<std::size_t>(a * q + b)] = number(s);
        std::vector<int> prod(static_cast<std::size_t>(2 * k), 0);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
          }
        }
        for (int t = 2 * k - 1; t >= k; --t) {
          const int c = prod[static_cast<std::size_t>(t)] % p;
          if (c == 0) continue;
          // x^t = x^(t-k) * x^k = -x^(t-k) * low(x)
          for (int i = 0; i < k; ++i) prod[static_cast<std::size_t>(t - k + i)] -= c * low[static_cast<std::size_t>(i)];
          prod[static_cast<std::size_t>(t)] = 0;
        }
        std::vector<int> r(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = ((prod[static_cast<std::size_t>(i)] % p) + p) % p;
        F.mul[static_cast<std::size_t>(a * q + b)] = number(r);
      }
    }
    bool field = true;
    for (int a = 1; a < q && field; ++a) {
      bool has_inverse = false;
      for (int b = 1; b < q; ++b) {
        if (F.mul[static_cast<std::size_t>(a * q + b)] == 1) has_inverse = true;
      }
      field = has_inverse;
    }
    if (!field) continue;
    for (int a = 2 % q; a < q; ++a) {
      if (a == 0) continue;
      int x = a;
      int order = 1;
      while (x != 1) {
        x = F.mul[static_cast<std::size_t>(x * q + a)];
        ++order;
      }
      if (order == q - 1) {
        F.primitive = a;
        break;
      }
    }
    if (q == 2) F.primitive = 1;
    return F;
  }
  throw GroupError("no irreducible modulus found for q = " + std::to_string(q));
}

// Aff(q) = F_q x| F_q^* acting on F_q by y -> m*y + t.
Spec affine(int q) {
  if (q < 2 || q > 16) throw GroupError("Aff(q) is provided for prime powers 2 <= q <= 16");
  const FiniteField F = finite_field(q);
  Perm t(static_cast<std::size_t>(q));
  Perm m(static_cast<std::size_t>(q));
  for (int y = 0; y < q; ++y) {
    t[static_cast<std::size_t>(y)] = static_cast<std::uint32_t>(F.add[static_cast<std::size_t>(y * q + 1)]);
    m[static_cast<std::size_t>(y)] = static_cast<std::uint32_t>(F.mul[static_cast<std::size_t>(F.primitive * q + y)]);
  }
  return {{t, m}, {"t", "m"}};
}

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 6) {
    throw GroupError("unknown group spec '" + std::string(whole) + "'");
  }
  return std::stoul(std::string(digits));
}

Spec factor_spec(std::string_view s) {
  if (s == "Q8") return quaternion();
  if (s == "SL2_3" || s == "SL(2,3)") return special_linear_2_3();
  if (s.starts_with("Aff")) {
    std::string_view rest = s.substr(3);
    if (rest.starts_with("_")) rest.remove_prefix(1);
    if (rest.starts_with("(") && rest.ends_with(")")) rest = rest.substr(1, rest.size() - 2);
    return affine(static_cast<int>(parse_count(rest, s)));
  }
  if (s.empty()) throw GroupError("empty group spec");
  const std::string_view digits = s.substr(1);
  switch (s.front()) {
    case 'C': return cyclic(parse_count(digits, s));
    case 'S': return symmetric(parse_count(digits, s));
    case 'A': return alternating(parse_count(digits, s));
    case 'D': return dihedral(parse_count(digits, s));
    default: break;
  }
  throw GroupError("unknown group spec '" + std::string(s) + "'");
}

}  // namespace

GroupPtr builtin_group(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto x = spec.find('x', pos);
    parts.push_back(spec.substr(pos, x == std::string_view::npos ? std::string_view::npos : x - pos));
    if (x == std::string_view::npos) break;
    pos = x + 1;
  }
  std::vector<Spec> factors;
  for (auto p : parts) factors.push_back(factor_spec(p));

  std::multiset<std::string> all_names;
  for (const auto& f : factors) all_names.insert(f.names.begin(), f.names.end());
  const bool clash = std::any_of(all_names.begin(), all_names.end(),
                                 [&](const std::string& n) { return all_names.count(n) > 1; });

  std::size_t total = 0;
  for (const auto& f : factors) {
    std::size_t deg = 1;
    for (const auto& g : f.gens) deg = std::max(deg, g.size());
    total += deg;
  }
  std::vector<Perm> gens;
  std::vector<std::string> names;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::size_t deg = 1;
    for (const auto& g : factors[i].gens) deg = std::max(deg, g.size());
    for (std::size_t j = 0; j < factors[i].gens.size(); ++j) {
      Perm p = perm_identity(total);
      const Perm& g = factors[i].gens[j];
      for (std::size_t k = 0; k < g.size(); ++k) p[offset + k] = static_cast<std::uint32_t>(offset + g[k]);
      gens.push_back(std::move(p));
      std::string name = factors[i].names[j];
      if (clash && factors.size() > 1) name += "_" + std::to_string(i + 1);
      names.push_back(std::move(name));
    }
    offset += deg;
  }
  return Group::from_generators(std::string(spec), std::move(gens), std::move(names));
}

const std::vector<std::string>& builtin_catalog() {
  static const std::vector<std::string> names = {
      "C1",  "C2",  "C3",    "C4",    "C5",    "C6",    "C8",    "C2xC2", "C2xC2xC2", "C3xC3",
      "S3",  "D4",  "Q8",    "D5",    "D6",    "A4",    "D8",    "SL2_3", "S4",       "C3xS3",
      "C2xQ8", "Aff_4", "Aff_5", "Aff_7", "Aff_8", "Aff_9", "A5", "S5"};
  return names;
}

}  // namespace grc
