#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grc/cyclotomic.hpp"
#include "grc/group.hpp"

namespace grc {

/// Values of a class function, one per conjugacy class in canonical class order.
using ClassFunction = std::vector<Cyclo>;

struct Character {
  ClassFunction values;

  long degree() const { return values.front().to_rational().get_num().get_si(); }
  bool is_linear() const { return degree() == 1; }
  friend bool operator==(const Character&, const Character&) = default;
};

class OrthogonalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Irr(G) with rows in canonical order: by degree, then lexicographically on
/// the coordinates of the values over Q(z_e).
class CharacterTable {
 public:
  /// Checks both orthogonality relations and throws OrthogonalityError on failure.
  CharacterTable(GroupPtr group, std::vector<Character> rows);

  const GroupPtr& group() const { return group_; }
  const ConjClasses& classes() const { return group_->classes(); }
  long exponent() const { return group_->exponent(); }
  std::size_t size() const { return rows_.size(); }
  const Character& operator[](std::size_t i) const { return rows_[i]; }
  std::span<const Character> rows() const { return rows_; }

  /// chi(g) for a group element g.
  const Cyclo& value(std::size_t chi, Index g) const {
    return rows_[chi].values[group_->classes().class_of[g]];
  }
  std::optional<std::size_t> find(const ClassFunction& values) const;
  /// perm[chi] = index of sigma_k(chi), k coprime to the exponent.
  std::vector<std::size_t> galois_permutation(long k) const;
  std::vector<long> degrees() const;
  /// Row of the trivial character.
  std::size_t trivial() const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.group_ == b.group_ && a.rows_ == b.rows_;
  }

 private:
  GroupPtr group_;
  std::vector<Character> rows_;
  std::size_t trivial_ = 0;
};

/// Sorts rows into canonical order.
void sort_canonical(std::vector<Character>& rows, long exponent);

bool rows_orthogonal(const Group& g, std::span<const Character> rows);
bool columns_orthogonal(const Group& g, std::span<const Character> rows);

/// Structure constants of the class algebra: C_i C_j = sum_k a(i,j,k) C_k.
class ClassMultTensor {
 public:
  explicit ClassMultTensor(const Group& g);
  std::size_t count() const { return c_; }
  long at(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * c_ + j) * c_ + k]; }

 private:
  std::size_t c_;
  std::vector<long> a_;
};

ClassMultTensor class_mult_coefficients(const Group& g);

/// Irr(G) by the Dixon-Schneider method: common eigenvectors of the class
/// multiplication matrices over F_p, lifted to Q(z_e) through the eigenvalue
/// multiplicities of each element.
CharacterTable dixon_table(const GroupPtr& g);

/// The prime the Dixon computation starts from: the smallest p = 1 (mod e)
/// with p > 2 * ceil(sqrt(|G|)).
std::uint64_t dixon_prime(std::size_t order, long exponent);

// File formats.
std::string format_table(const CharacterTable& t);
CharacterTable parse_table(std::string_view text, const GroupPtr& g);
void save_table(const CharacterTable& t, const std::filesystem::path& path);
CharacterTable load_table(const std::filesystem::path& path, const GroupPtr& g);

struct DegreeEntry {
  Integer degree;
  Integer multiplicity;
  friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};
using DegreeList = std::vector<DegreeEntry>;

DegreeList parse_degrees(std::string_view text);
DegreeList load_degrees(const std::filesystem::path& path);
DegreeList degree_list(const CharacterTable& t);

}  // namespace grc
