#ifndef CNG_COMMON_HPP
#define CNG_COMMON_HPP

#include <stdexcept>
#include <string>

namespace cng {

/// Absolute tolerance on budget (knapsack) constraints.
inline constexpr double kFeasibilityTol = 1e-9;

/// Branch-and-bound pruning tolerance: prune only when bound <= incumbent + kBoundTol.
inline constexpr double kBoundTol = 1e-9;

/// Slack allowed when checking equilibrium inequalities on a returned profile.
inline constexpr double kCutTol = 1e-9;

/// Default tolerance below which a certified deviation gap counts as an exact equilibrium.
inline constexpr double kNeToleranceDefault = 1e-6;

enum class ErrorCode {
  OrderingViolation,   // delta < eta < epsilon fails
  RangeViolation,      // payoff factor outside [0,1]
  ShapeMismatch,       // vector length != n
  NonpositiveWeight,   // selection weight <= 0
  IndexOutOfRange,
  SizeLimitExceeded,   // enumeration cap hit
  EmptySnapshot,
  UnknownRole,
  InvalidInstance,
  IoError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class CngError : public std::runtime_error {
public:
  CngError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace cng

#endif  // CNG_COMMON_HPP
