#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfdyn {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  OrderUnderflow,
  SingularLinearPart,
  NonAttracting,
  NotCommuting,
  Unsupported,
  ResonanceInconsistency,
  NotDivisible,
  NotContractible,
  NotATree,
  BranchedLeg,
  MatchingViolated,
  CycleObstruction,
  InconsistentDynamics,
  BadOrbifold,
  SncViolation,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;
/// Enumerator name, for machine-readable output.
std::string_view code_name(ErrorCode code) noexcept;

/// Single exception type for the library; the code identifies the failed
/// precondition so callers (and the CLI) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace surfdyn
