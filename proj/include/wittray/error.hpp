#pragma once

#include <stdexcept>
#include <string>

namespace wittray {

enum class ErrorCode {
  DimensionMismatch,
  NotMember,
  ZeroElement,
  Undecidable,
  InvalidMonoid,
  InvalidWeight,
  InvalidArgument,
  NonExactDivision,
  RingMismatch,
  BaseMismatch,
  ResourceLimit,
  Unsupported,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Domain error raised by every library module. `module()` names the
/// originating module so the CLI can echo it in its structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace wittray
