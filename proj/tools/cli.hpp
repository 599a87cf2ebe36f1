#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoalg::cli {

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Returns 0 on success or when a checked property
// holds, 1 when it fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoalg::cli
