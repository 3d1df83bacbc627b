#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgw::cli {

enum ExitCode { kOk = 0, kInputError = 1, kSemanticFailure = 2, kInternalError = 3 };

/// Runs the qgw command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgw::cli
