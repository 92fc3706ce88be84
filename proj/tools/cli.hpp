#pragma once

#include <ostream>

namespace pcoinv::cli {

/// Exit codes: 0 ok, 1 a checked identity failed, 2 usage or budget error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcoinv::cli
