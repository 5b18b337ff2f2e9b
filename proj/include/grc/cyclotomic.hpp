#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grc {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

long gcd(long a, long b);
long lcm(long a, long b);
long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long n);

namespace detail {
struct CycloField;
}

/// An element of the cyclotomic field Q(z) with z a fixed primitive e-th root
/// of unity.  Coordinates are taken in the power basis 1, z, ..., z^(phi(e)-1)
/// modulo the e-th cyclotomic polynomial, so equal values of equal conductor
/// have equal coordinates.
///
/// The conductor is whatever the value was built in; it is not minimised.
/// Binary operations lift both sides to the lcm of their conductors, where
/// z_d is identified with z_e^(e/d).
class Cyclo {
 public:
  Cyclo();
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// z_e^k with k reduced mod e.
  static Cyclo root(long e, long k);
  static Cyclo from_coords(long e, std::vector<Rational> coords);

  long conductor() const;
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational to_rational() const;

  /// The same value expressed over Q(z_e); e must be a multiple of the conductor.
  Cyclo lift(long e) const;

  /// The automorphism z -> z^k; throws std::invalid_argument unless gcd(k, e) = 1.
  Cyclo galois(long k) const;
  /// Complex conjugation (galois(-1)).
  Cyclo conj() const;
  Cyclo inverse() const;
  Cyclo pow(long exponent) const;
  /// The same value with conductor 1 when it is rational.
  Cyclo compact() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Cyclo& other);
  Cyclo& operator*=(const Rational& scalar);
  Cyclo& operator/=(const Cyclo& other);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const Rational& b) { return a *= b; }
  friend Cyclo operator*(const Rational& a, Cyclo b) { return b *= a; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);

  /// Adds scale * other into this value without temporaries for the lifted copy.
  void add_scaled(const Cyclo& other, const Rational& scale);

  /// Literal of the form `a/b*z^k + ...` relative to z_e (e a multiple of the conductor).
  std::string to_string(long e) const;
  std::string to_string() const { return to_string(conductor()); }

  /// Parses a literal produced by to_string(e).
  static Cyclo parse(std::string_view text, long e);

  /// Strict weak order on coordinates (after lifting to a common conductor).
  static int compare(const Cyclo& a, const Cyclo& b);

 private:
  Cyclo(const detail::CycloField* field, std::vector<Rational> coords);
  void lift_in_place(long e);

  const detail::CycloField* field_;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

/// Least common multiple of the denominators of rational values.  Throws
/// std::domain_error if one of the values is irrational.
Integer denominator_lcm(std::span<const Cyclo> values);
Integer denominator_lcm(std::span<const Rational> values);

}  // namespace grc
