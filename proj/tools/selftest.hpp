#pragma once

#include <iosfwd>

namespace wittray::cli {

/// Fast invariant suite; prints one PASS/FAIL line per check.
bool run_selftest(std::ostream& out);

}  // namespace wittray::cli
