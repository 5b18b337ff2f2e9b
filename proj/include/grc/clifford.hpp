#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grc/chartab.hpp"
#include "grc/group.hpp"
#include "grc/groupring.hpp"

namespace grc {

/// A function on the elements of a parent group, zero off the subgroup it is
/// attached to.
using ElementFunction = std::vector<Cyclo>;

/// Classes of a subgroup U mapped to the classes of G containing them.
struct ClassFusion {
  EmbeddedSubgroup embedded;
  std::vector<Index> map;  // U-class -> G-class

  const Subgroup& subgroup() const { return embedded.subgroup; }
};

ClassFusion class_fusion(const Subgroup& u);

/// A subgroup with its own character table.
struct SubgroupTable {
  ClassFusion fusion;
  std::shared_ptr<const CharacterTable> table;

  const Subgroup& subgroup() const { return fusion.subgroup(); }
  std::size_t order() const { return subgroup().order(); }
  /// Row psi of Irr(U) as a function on the parent's elements.
  ElementFunction lift(std::size_t psi) const;
  ElementFunction lift(const ClassFunction& f) const;
  /// Values on the classes of U of a function supported on U.
  ClassFunction to_classes(const ElementFunction& f) const;
  std::optional<std::size_t> find(const ElementFunction& f) const;
};

SubgroupTable subgroup_table(const Subgroup& u);

ClassFunction restrict_character(const ClassFunction& chi, const SubgroupTable& u);
/// (ind psi)(g) = 1/|U| sum over h in G with h^-1 g h in U of psi(h^-1 g h).
ClassFunction induce_character(const ClassFunction& psi, const SubgroupTable& u);
/// 1/|G| sum_i |C_i| a_i conj(b_i)
Cyclo inner_product(const Group& g, const ClassFunction& a, const ClassFunction& b);

// Element-level versions, used when several subgroups of one parent interact.
ElementFunction element_values(const CharacterTable& t, std::size_t chi);
ElementFunction restrict_to(const ElementFunction& f, const Subgroup& u);
/// Induction from u to k (u a subgroup of k), both subgroups of the parent.
ElementFunction induce_between(const ElementFunction& f, const Subgroup& u, const Subgroup& k);
Cyclo inner_product_on(const Subgroup& k, const ElementFunction& a, const ElementFunction& b);
/// x(f)(y) = f(x^-1 y x)
ElementFunction conjugate_by(const Group& g, const ElementFunction& f, Index x);
ElementFunction pointwise_product(const ElementFunction& a, const ElementFunction& b);
/// f(1)/|K| sum_{k in K} f(k^-1) k
KElement idempotent_on(const Subgroup& k, const ElementFunction& f);
/// Smallest subgroup containing n and every element where f is non-zero.
Subgroup support_closure(const Subgroup& n, const ElementFunction& f);

/// eta in Irr(N) for N normal in G, its G-orbit and stabilizer, the characters
/// of G over it and the constituents of its induction to the stabilizer.
struct InductionData {
  std::shared_ptr<const SubgroupTable> normal;  // N
  std::size_t eta = 0;                           // row of Irr(N)
  std::vector<std::size_t> orbit;                // rows x(eta), x over G/G_eta, eta first
  std::vector<Index> transversal;                // the matching coset representatives
  Subgroup stabilizer;                           // G_eta
  std::shared_ptr<const SubgroupTable> stab;     // table of G_eta
  std::vector<std::size_t> chis;                 // rows of Irr(G) lying over eta
  std::vector<long> chi_multiplicity;            // <res chi, eta>
  std::vector<std::size_t> psis;                 // constituents of ind_N^{G_eta} eta
  std::vector<long> psi_multiplicity;
};

/// Throws std::invalid_argument unless N is normal.
InductionData stabilizer_and_orbit(const CharacterTable& g, std::shared_ptr<const SubgroupTable> n, std::size_t eta);

/// sum over the orbit of e_{x(eta)}; an element of K[N].
KElement e_of_eta(const InductionData& d);

/// Sum of e_chi' over the chi' whose restriction to N is a Galois conjugate of
/// that of chi.  Throws std::invalid_argument unless N contains G'.
CentralElement epsilon_chi(const CharacterTable& g, const SubgroupTable& n, std::size_t chi);

/// The subgroup generated by N and the support of psi, psi a character of a
/// subgroup of the parent containing N.
Subgroup U_psi(const Subgroup& n, const ElementFunction& psi);

enum class CheckStatus { Pass, Fail, Skip };
const char* status_name(CheckStatus s);

struct CheckLine {
  CheckStatus status = CheckStatus::Skip;
  std::string id;
  std::string context;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  void add(CheckStatus s, std::string id, std::string context);
  void add(bool ok, std::string id, std::string context) { add(ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(id), std::move(context)); }
  void append(const CheckReport& other);
  bool any_failed() const;
  std::size_t count(CheckStatus s) const;
  /// One `PASS|FAIL|SKIP <id> <context>` line per check.
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// The idempotent identities of Clifford theory for chi in Irr(G) and N normal
/// in G.  Identities whose hypotheses fail are reported as SKIP.
CheckReport verify_idempotent_identities(const CharacterTable& g, const Subgroup& n, std::size_t chi);

/// chi with res_N chi irreducible and U_chi = G, induced from a character of a
/// proper normal subgroup H.
struct InducedConfiguration {
  std::size_t chi = 0;
  Subgroup h;
  std::size_t lambda = 0;  // row of Irr(H)
};

/// All such configurations for N, searching the proper normal subgroups H.
std::vector<InducedConfiguration> induced_configurations(const CharacterTable& g, const Subgroup& n);

/// The matrix of H restricted to U: block entries w(g_i^-1 H_jk g_l) over K[U],
/// g_i the left coset representatives of U.  Returned over the embedded group.
QMatrix restrict_matrix(const QMatrix& h, const ClassFusion& u);

struct RestrictionCheck {
  std::vector<Cyclo> direct;   // components of nr_U(H|_U)
  std::vector<Cyclo> formula;  // prod_chi alpha_chi^<ind psi, chi>
  bool agree = false;
};

RestrictionCheck restriction_norm_check(const CharacterTable& g, const QMatrix& h, const SubgroupTable& u);

struct FrobeniusStructure {
  Subgroup kernel;
  Subgroup complement;
};

/// Detects a Frobenius complement among the subgroups; nullopt when none
/// exists or |G| exceeds 1000.
std::optional<FrobeniusStructure> frobenius_structure(const GroupPtr& g);

}  // namespace grc
