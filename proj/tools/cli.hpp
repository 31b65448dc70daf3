#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperfns::cli {

// Exit codes: 0 success, 1 domain or usage error (one line on err),
// 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperfns::cli
