#pragma once

#include <iosfwd>

namespace wittray::cli {

/// Runs one command. Exit status: 0 success, 1 domain error (structured
/// JSON on err), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wittray::cli
