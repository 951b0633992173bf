#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace peaklab::cli {

enum ExitCode { ok = 0, identity_failed = 1, usage = 2, resource = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peaklab::cli
