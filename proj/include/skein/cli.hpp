#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skein::cli {

/// Exit codes: 0 success or all checks PASS/AMBIGUOUS, 1 a check FAILed,
/// 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein::cli
