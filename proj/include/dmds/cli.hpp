#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmds::cli {

/// Runs one invocation; `args` excludes the program name. Returns 0 on
/// success, 1 when a requested check fails, 2 on invalid input. Validation
/// errors print "error[<Code>]: <message>" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmds::cli
