#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grc/chartab.hpp"
#include "grc/groupring.hpp"

namespace grc {

struct ProbeConfig {
  std::string group;                  // builtin name or @file
  std::vector<std::size_t> sizes{1, 2};  // random trial i uses sizes[i % sizes.size()]
  long bound = 3;                     // coefficients uniform in [-bound, bound]
  std::size_t trials = 100;           // random trials, after the deterministic ones
  std::uint64_t seed = 1;
  /// Generator words of a normal subgroup N containing G'.  When set, each
  /// trial also checks |N| nr(H) eps and |N|/eta(1) eps H* for the Galois
  /// orbit sums eps of the e(eta).
  std::vector<std::string> normal;
  bool check_identities = true;  // H H* = nr(H) I and nr(AB) = nr(A) nr(B)

  /// Throws std::invalid_argument on n < 1, bound < 1 or trials < 1.
  void validate() const;
};

struct TrialRecord {
  std::size_t index = 0;
  std::string kind;  // "zero", "generator <word>", "random"
  std::size_t n = 1;
  std::string digest;  // FNV-1a of the matrix text, hex
  Integer nr_denominator;
  Integer adjoint_denominator;
};

struct Violation {
  std::size_t trial = 0;
  std::string what;
};

struct Witness {
  std::string element;  // coefficient literal
  std::vector<Rational> norm;  // class-sum coordinates of nr
  Integer denominator;
};

struct ProbeReport {
  std::string group;
  std::size_t order = 0;
  std::size_t commutator_order = 0;
  Integer d_G;  // lcm of |G'| and the class sizes
  ProbeConfig config;
  std::vector<TrialRecord> records;
  Integer max_nr_denominator{1};
  Integer max_adjoint_denominator{1};
  std::vector<Violation> violations;
  std::optional<Witness> witness;  // first 1x1 trial with non-integral nr

  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Deterministic trials H = 0 and H = [g] for each generator g, then the
/// random trials.  Trial i draws from splitmix64 seeded with
/// seed ^ (i + 1) * 0x9e3779b97f4a7c15.
ProbeReport probe_denominator_ideal(const ProbeConfig& cfg);
ProbeReport probe_denominator_ideal(const CharacterTable& t, const ProbeConfig& cfg);

/// The random matrix of trial `index`.
QMatrix probe_matrix(const GroupPtr& g, std::size_t n, long bound, std::uint64_t seed, std::size_t index);

struct WitnessSearch {
  bool abelian = false;
  std::optional<Witness> witness;
  std::size_t candidates = 0;
  std::string note;

  nlohmann::json to_json() const;
};

/// Class representatives first, then a x + b y with 1 <= |a|, |b| <= bound.
WitnessSearch nonintegral_witness_search(const CharacterTable& t, long bound = 1);

struct AModP {
  Integer residue;               // in [0, p)
  std::optional<Integer> exact;  // A(n) when the degrees are small
};

/// A(n) = sum over characters of n^chi(1) chi(1)^2 modulo p.  Throws
/// std::invalid_argument unless p is prime.
AModP a_n_mod_p(const DegreeList& degrees, const Integer& n, const Integer& p);

struct HpgCheck {
  Integer p;
  bool p_divides_commutator = false;
  Integer commutator_p_part;
  Integer zero_trial_p_part;   // p-part of the denominator of 0*
  Integer max_adjoint_p_part;  // over all probed trials
  bool consistent = false;

  nlohmann::json to_json() const;
};

/// p-integrality of the probed adjoints against p | |G'|.
HpgCheck hpg_criterion_check(const CharacterTable& t, const Integer& p, const ProbeConfig& cfg);

/// p-part of a positive integer.
Integer p_part(const Integer& x, const Integer& p);

}  // namespace grc
