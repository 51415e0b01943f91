#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcomb::cli {

/// Runs one command. args excludes the program name. Exit codes: 0 success
/// (and every checked identity equal), 1 at least one identity mismatch,
/// 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcomb::cli
