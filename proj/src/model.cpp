#include "cng/model.hpp"

#include <cstddef>
#include <string>

namespace cng {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderingViolation: return "ORDERING_VIOLATION";
    case ErrorCode::RangeViolation: return "RANGE_VIOLATION";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::NonpositiveWeight: return "NONPOSITIVE_WEIGHT";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::SizeLimitExceeded: return "SIZE_LIMIT_EXCEEDED";
    case ErrorCode::EmptySnapshot: return "EMPTY_SNAPSHOT";
    case ErrorCode::UnknownRole: return "UNKNOWN_ROLE";
    case ErrorCode::InvalidInstance: return "INVALID_INSTANCE";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN_ERROR";
}

namespace {

void check_shape(std::size_t actual, int n, const char* name) {
  if (actual != static_cast<std::size_t>(n)) {
    throw CngError(ErrorCode::ShapeMismatch,
                   std::string(name) + " has length " + std::to_string(actual) +
                       ", expected " + std::to_string(n));
  }
}

void check_factor_range(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw CngError(ErrorCode::RangeViolation,
                   std::string(name) + " = " + std::to_string(value) + " outside [0,1]");
  }
}

}  // namespace

void validate(const CngInstance& instance) {
  if (instance.n <= 0) {
    throw CngError(ErrorCode::InvalidInstance, "n must be positive");
  }
  check_shape(instance.defender_profits.size(), instance.n, "p_d");
  check_shape(instance.attacker_profits.size(), instance.n, "p_a");
  check_shape(instance.defender_weights.size(), instance.n, "d");
  check_shape(instance.attacker_weights.size(), instance.n, "a");

  check_factor_range(instance.delta, "delta");
  check_factor_range(instance.eta, "eta");
  check_factor_range(instance.epsilon, "epsilon");
  check_factor_range(instance.gamma, "gamma");
  if (!(instance.delta < instance.eta && instance.eta < instance.epsilon)) {
    throw CngError(ErrorCode::OrderingViolation, "delta < eta < epsilon must hold strictly");
  }

  for (int i = 0; i < instance.n; ++i) {
    if (!(instance.defender_weights[i] > 0.0)) {
      throw CngError(ErrorCode::NonpositiveWeight, "d[" + std::to_string(i) + "] <= 0");
    }
    if (!(instance.attacker_weights[i] > 0.0)) {
      throw CngError(ErrorCode::NonpositiveWeight, "a[" + std::to_string(i) + "] <= 0");
    }
    if (instance.defender_profits[i] < 0.0 || instance.attacker_profits[i] < 0.0) {
      throw CngError(ErrorCode::InvalidInstance, "profits must be nonnegative");
    }
  }
  if (instance.defender_budget < 0.0 || instance.attacker_budget < 0.0) {
    throw CngError(ErrorCode::InvalidInstance, "budgets must be nonnegative");
  }
}

PayoffCell evaluate_cell(const CngInstance& instance, int i, bool x_i, bool alpha_i) {
  if (i < 0 || i >= instance.n) {
    throw CngError(ErrorCode::IndexOutOfRange,
                   "node " + std::to_string(i) + " outside [0," + std::to_string(instance.n) + ")");
  }
  const double pd = instance.defender_profits[i];
  const double pa = instance.attacker_profits[i];
  if (x_i) {
    if (alpha_i) return {instance.eta * pd, (1.0 - instance.eta) * pa};  // mitigated attack
    return {instance.epsilon * pd, 0.0};                                 // mitigation, no attack
  }
  if (alpha_i) return {instance.delta * pd, pa};  // successful attack
  return {pd, -instance.gamma * pa};              // normal operations
}

double defender_payoff(const CngInstance& instance,
                       std::span<const std::uint8_t> defense,
                       std::span<const std::uint8_t> attack) {
  const int n = instance.n;
  if (defense.size() != static_cast<std::size_t>(n) || attack.size() != static_cast<std::size_t>(n)) {
    throw CngError(ErrorCode::ShapeMismatch, "profile vectors must have length n");
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double pd = instance.defender_profits[i];
    if (defense[i]) {
      total += attack[i] ? instance.eta * pd : instance.epsilon * pd;
    } else {
      total += attack[i] ? instance.delta * pd : pd;
    }
  }
  return total;
}

double defender_payoff(const CngInstance& instance, const StrategyProfile& profile) {
  return defender_payoff(instance, profile.defense, profile.attack);
}

double attacker_payoff(const CngInstance& instance,
                       std::span<const std::uint8_t> defense,
                       std::span<const std::uint8_t> attack) {
  const int n = instance.n;
  if (defense.size() != static_cast<std::size_t>(n) || attack.size() != static_cast<std::size_t>(n)) {
    throw CngError(ErrorCode::ShapeMismatch, "profile vectors must have length n");
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double pa = instance.attacker_profits[i];
    if (defense[i]) {
      if (attack[i]) total += (1.0 - instance.eta) * pa;
      // protected and unattacked contributes 0
    } else {
      total += attack[i] ? pa : -instance.gamma * pa;
    }
  }
  return total;
}

double attacker_payoff(const CngInstance& instance, const StrategyProfile& profile) {
  return attacker_payoff(instance, profile.defense, profile.attack);
}

bool within_budget(std::span<const double> weights,
                   std::span<const std::uint8_t> selection,
                   double budget) {
  double used = 0.0;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i]) used += weights[i];
  }
  return used <= budget + kFeasibilityTol;
}

bool is_feasible(const CngInstance& instance, const StrategyProfile& profile) {
  return within_budget(instance.defender_weights, profile.defense, instance.defender_budget) &&
         within_budget(instance.attacker_weights, profile.attack, instance.attacker_budget);
}

}  // namespace cng
