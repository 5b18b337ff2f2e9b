#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grc/chartab.hpp"
#include "grc/cyclotomic.hpp"
#include "grc/group.hpp"

namespace grc {

/// An element sum_g x_g g of K[G], stored densely.
template <class K>
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr g);

  static GroupRingElement basis(GroupPtr g, Index x, const K& c = K(1));
  static GroupRingElement one(GroupPtr g) { return basis(std::move(g), 0); }

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return coeffs_.size(); }
  const K& operator[](Index x) const { return coeffs_[x]; }
  K& operator[](Index x) { return coeffs_[x]; }
  std::span<const K> coeffs() const { return coeffs_; }
  bool is_zero() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const K& scalar);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, const K& s) { return a *= s; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return multiply(a, b); }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

  static GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b);

  /// `c * g<idx>` terms joined by " + "; "0" for zero.
  std::string to_string() const;
  /// Same with generator words in place of g<idx>.
  std::string to_words() const;

 private:
  GroupPtr group_;
  std::vector<K> coeffs_;
};

using QElement = GroupRingElement<Rational>;
using KElement = GroupRingElement<Cyclo>;

KElement to_cyclo(const QElement& x);
/// Null unless every coefficient is rational.
std::optional<QElement> to_rational(const KElement& x);
Integer denominator(const QElement& x);
bool is_integral(const QElement& x);

/// Terms `q:word` (or a bare word for coefficient 1) separated by commas; "0" is zero.
QElement parse_element_literal(const GroupPtr& g, std::string_view text);
/// Inverse of parse_element_literal: `q:word` terms in element order.
std::string format_element(const QElement& x);

/// A square matrix over K[G], row-major.
template <class K>
class GroupRingMatrix {
 public:
  using Element = GroupRingElement<K>;

  GroupRingMatrix() = default;
  GroupRingMatrix(GroupPtr g, std::size_t n);
  static GroupRingMatrix identity(GroupPtr g, std::size_t n);
  static GroupRingMatrix scalar(const Element& x, std::size_t n);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return n_; }
  const Element& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Element& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  GroupRingMatrix& operator+=(const GroupRingMatrix& o);
  GroupRingMatrix& operator-=(const GroupRingMatrix& o);
  friend GroupRingMatrix operator+(GroupRingMatrix a, const GroupRingMatrix& b) { return a += b; }
  friend GroupRingMatrix operator-(GroupRingMatrix a, const GroupRingMatrix& b) { return a -= b; }
  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) { return multiply(a, b); }
  /// Left multiplication of every entry by x.
  friend GroupRingMatrix operator*(const Element& x, const GroupRingMatrix& m) { return scale_left(x, m); }
  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    return a.group_ == b.group_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  static GroupRingMatrix multiply(const GroupRingMatrix& a, const GroupRingMatrix& b);
  static GroupRingMatrix scale_left(const Element& x, const GroupRingMatrix& m);

 private:
  GroupPtr group_;
  std::size_t n_ = 0;
  std::vector<Element> entries_;
};

using QMatrix = GroupRingMatrix<Rational>;
using KMatrix = GroupRingMatrix<Cyclo>;

KMatrix to_cyclo(const QMatrix& m);
Integer denominator(const QMatrix& m);
bool is_integral(const QMatrix& m);

/// Rows separated by ';', entries within a row by '|', entries as element literals.
QMatrix parse_matrix_literal(const GroupPtr& g, std::string_view text);
std::string format_matrix(const QMatrix& m);

/// sum_g x_g chi(g)
Cyclo chi_trace(const CharacterTable& t, std::size_t chi, const QElement& x);
Cyclo chi_trace(const CharacterTable& t, std::size_t chi, const KElement& x);

/// Reduced characteristic polynomial of H in the component of chi.
struct RedCharPoly {
  std::size_t chi = 0;
  std::vector<Cyclo> coeffs;  // lowest degree first; monic

  std::size_t degree() const { return coeffs.size() - 1; }
  friend bool operator==(const RedCharPoly&, const RedCharPoly&) = default;
};

/// An element of the centre of Q(z_e)[G], held by its components in the
/// Wedderburn decomposition.  Class-sum coordinates are computed on
/// construction and present exactly when they are all rational.
class CentralElement {
 public:
  CentralElement() = default;
  CentralElement(const CharacterTable& t, std::vector<Cyclo> components);
  static CentralElement from_class_sums(const CharacterTable& t, std::span<const Rational> coords);
  static CentralElement one(const CharacterTable& t);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclo>& components() const { return components_; }
  const Cyclo& component(std::size_t chi) const { return components_[chi]; }
  bool is_galois_stable() const { return class_sums_.has_value(); }
  /// Throws std::domain_error unless Galois-stable.
  const std::vector<Rational>& class_sums() const;
  QElement to_element() const;

  friend bool operator==(const CentralElement& a, const CentralElement& b) {
    return a.group_ == b.group_ && a.components_ == b.components_;
  }

  /// `(1/d)(3C1 - C2 + ...)` with classes numbered from 1.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  GroupPtr group_;
  std::vector<Cyclo> components_;
  std::optional<std::vector<Rational>> class_sums_;
};

std::vector<Rational> central_to_classsums(const CentralElement& z);

RedCharPoly reduced_char_poly(const CharacterTable& t, const QMatrix& h, std::size_t chi);
RedCharPoly reduced_char_poly(const CharacterTable& t, const KMatrix& h, std::size_t chi);
std::vector<RedCharPoly> reduced_char_polys(const CharacterTable& t, const QMatrix& h);
std::vector<RedCharPoly> reduced_char_polys(const CharacterTable& t, const KMatrix& h);

CentralElement reduced_norm(const CharacterTable& t, const QMatrix& h);
CentralElement reduced_norm(const CharacterTable& t, const KMatrix& h);

struct NormAndAdjoint {
  CentralElement norm;
  QMatrix adjoint;
};

/// H* with H H* = H* H = nr(H) I.
QMatrix generalized_adjoint(const CharacterTable& t, const QMatrix& h);
NormAndAdjoint norm_and_adjoint(const CharacterTable& t, const QMatrix& h);

/// e_chi = chi(1)/|G| sum_g chi(g^-1) g
KElement idempotent(const CharacterTable& t, std::size_t chi);

/// Sum of e_chi over the characters of degree d.
CentralElement E_d(const CharacterTable& t, long d);

struct IntegralityReport {
  Integer denominator;
  bool is_central_integral = false;
};

IntegralityReport integrality_report(const CentralElement& z);

}  // namespace grc
