#pragma once

#include <ostream>

namespace stsurf::cli {

/// Exit codes: 0 pass, 1 a check failed or was refused, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stsurf::cli
