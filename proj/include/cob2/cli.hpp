#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cob2 {

/// Command-line entry point. Exit codes: 0 success / true / pass,
/// 1 semantic false / fail, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cob2
