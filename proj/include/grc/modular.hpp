#pragma once

#include <cstdint>
#include <vector>

namespace grc::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// p must be prime and a non-zero mod p.
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Smallest generator of (Z/p)^*.
inline u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 0;
}

}  // namespace grc::modp
