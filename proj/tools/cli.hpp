#pragma once

#include <ostream>

namespace ftabfs {

// Exit codes: 0 pass, 1 verification failure, 2 work limit exceeded, 3 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftabfs
