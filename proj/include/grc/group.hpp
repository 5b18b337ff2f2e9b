#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace grc {

using Index = std::uint32_t;
/// A permutation of {0, ..., n-1} stored as its image list.  Products compose
/// right to left: (p * q)(i) = p(q(i)).
using Perm = std::vector<std::uint32_t>;

Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_identity(std::size_t degree);

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on group orders (10^4), overridden by GRC_SIZE_CAP.
std::size_t size_cap();

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Conjugacy classes, ordered by (size, smallest element index).  Class 0 is
/// the identity.
struct ConjClasses {
  std::vector<Index> class_of;
  std::vector<Index> reps;
  std::vector<std::size_t> sizes;
  std::vector<Index> inverse_class;
  std::vector<std::vector<Index>> members;

  std::size_t count() const { return reps.size(); }
};

/// A finite group given by permutations.  Elements are numbered in shortlex
/// order of their generator words; index 0 is the identity.  Instances are
/// immutable once built.
class Group {
 public:
  static GroupPtr from_generators(std::string name, std::vector<Perm> generators,
                                  std::vector<std::string> generator_names,
                                  std::size_t cap = size_cap());

  const std::string& name() const { return name_; }
  std::size_t order() const { return perms_.size(); }
  std::size_t degree() const { return degree_; }

  Index mult(Index g, Index h) const;
  Index inv(Index g) const { return inverse_[g]; }
  Index pow(Index g, long k) const;
  /// h^-1 g h
  Index conj(Index g, Index h) const { return mult(mult(inverse_[h], g), h); }
  /// g h g^-1 h^-1
  Index commutator(Index g, Index h) const { return mult(mult(g, h), mult(inverse_[g], inverse_[h])); }

  std::span<const Index> generators() const { return generators_; }
  std::span<const std::string> generator_names() const { return generator_names_; }
  const Perm& perm(Index g) const { return perms_[g]; }
  std::optional<Index> index_of(const Perm& p) const;

  /// Shortlex generator word, e.g. "a^2*x"; "1" for the identity.
  std::string word(Index g) const;
  /// Accepts generator words ("a^2*x", "alpha*gamma^-1"), "g<idx>" and "1".
  Index parse_element(std::string_view text) const;

  Index element_order(Index g) const { return orders_[g]; }
  long exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  const ConjClasses& classes() const { return classes_; }
  /// Row-major multiplication table; empty when the order is too large to tabulate.
  std::span<const Index> cayley_table() const { return table_; }

 private:
  Group() = default;
  void build_classes();

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, Index, PermHash> lookup_;
  std::vector<Index> generators_;
  std::vector<std::string> generator_names_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;  // Cayley table, row-major, when the order is small
  std::vector<Index> word_parent_;
  std::vector<std::uint32_t> word_letter_;
  std::vector<Index> orders_;
  long exponent_ = 1;
  bool abelian_ = true;
  ConjClasses classes_;
};

/// A subgroup of a parent group, stored as a sorted member list.
class Subgroup {
 public:
  Subgroup() = default;
  /// Validates closure under multiplication.
  Subgroup(GroupPtr parent, std::vector<Index> members);

  const GroupPtr& parent() const { return parent_; }
  std::span<const Index> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const;
  bool contains(Index g) const { return mask_[g]; }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Index> members_;
  std::vector<bool> mask_;
  bool normal_ = false;
};

/// A subgroup realised as a group in its own right, with the element maps.
struct EmbeddedSubgroup {
  Subgroup subgroup;
  GroupPtr group;
  std::vector<Index> to_parent;  // sub index -> parent index
  std::vector<std::int64_t> from_parent;  // parent index -> sub index or -1
};

EmbeddedSubgroup embed(const Subgroup& u);

struct Quotient {
  GroupPtr group;
  std::vector<Index> projection;  // parent index -> quotient index
};

GroupPtr builtin_group(std::string_view spec);
/// The fixed list of named groups the checks run over.
const std::vector<std::string>& builtin_catalog();
GroupPtr load_group(const std::filesystem::path& path, std::size_t cap = size_cap());
GroupPtr parse_group_text(std::string_view text, std::string name, std::size_t cap = size_cap());
/// Builtin name, or "@path" for a group file.
GroupPtr resolve_group(std::string_view spec);

const ConjClasses& conjugacy_classes(const Group& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, std::span<const Index> gens);
Subgroup normal_closure(const GroupPtr& g, std::span<const Index> gens);
Subgroup commutator_subgroup(const GroupPtr& g);
Subgroup centre(const GroupPtr& g);
Index element_order(const Group& g, Index x);
long exponent(const Group& g);
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);
/// All normal subgroups, sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);
/// All subgroups, or nullopt when more than `limit` are found.
std::optional<std::vector<Subgroup>> all_subgroups(const GroupPtr& g, std::size_t limit = 20000);
/// Left coset representatives of u, the smallest element of each coset.
std::vector<Index> left_coset_reps(const Subgroup& u);

}  // namespace grc
