#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newton_certify::cli {

/// Runs one subcommand (args exclude the program name) and writes a single
/// JSON document to `out`. Returns 0 on success, 1 on domain errors (the
/// document is {"error": ...}), 2 on usage errors.
///
/// Subcommands: newton, contains-o, stencil, certify, morse, milnor, face,
/// minimal. `default_seed` applies when --seed is absent.
int run(const std::vector<std::string>& args, std::ostream& out, unsigned long long default_seed = 0);

}  // namespace newton_certify::cli
