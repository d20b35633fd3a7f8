#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hc::cli {

// Runs one batch command. args excludes the program name. Exit codes:
// 0 success, 1 fatal parse/track errors, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hc::cli
