#pragma once

#include <ostream>

namespace polyzeta {

/// Exit codes: 0 success / all checks pass, 1 a verification check failed,
/// 2 invalid arguments or configuration.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyzeta
