#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grc/clifford.hpp"

namespace grc {

/// Monster residues of A(-1) at the primes 17, 19, ..., 71.
struct MonsterRow {
  long p;
  long residue;
};
const std::vector<MonsterRow>& monster_residue_table();

/// The worked examples, one line each.  The Monster row is skipped unless a
/// degree file is given.
CheckReport reproduce_examples(const std::optional<std::filesystem::path>& monster_degrees);

/// Command-line entry point; args excludes the program name.  Returns 0 on
/// success, 1 when a mathematical check fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grc
