#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucp {

// Full command dispatcher. Exit codes: 0 success, 1 domain error,
// 2 verification failure, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ucp
