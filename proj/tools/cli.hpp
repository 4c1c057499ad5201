#pragma once

#include <ostream>

namespace relxl {

/// Whole command line, including the program name. Returns the exit code:
/// 0 pass, 2 condition failure, 1 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relxl
