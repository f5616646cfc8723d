#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brokenstick::cli {

// Parses and runs one invocation. `args` excludes the program name.
// Returns 0 on success, 2 on bad arguments (usage goes to `err`),
// 1 on internal errors. Single-document output goes to `out` unless
// the invocation redirects it with --out.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace brokenstick::cli
