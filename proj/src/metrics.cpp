#include "cng/metrics.hpp"

#include <limits>

namespace cng {

namespace {

PriceReport price(const CngInstance& instance, const SolveConfig& base_config,
                  MasterObjective objective) {
  SolveConfig config = base_config;
  config.objective = objective;

  PriceReport report;
  report.best_ne = solve(instance, config);

  MasterLimits limits;
  limits.time_limit_s = config.time_limit_s;
  limits.node_limit = config.master_node_limit;
  const MasterResult outcome = solve_master(instance, CutPool{}, objective, 0.0, limits);
  if (outcome.status != MasterStatus::Optimal) {
    throw CngError(ErrorCode::SizeLimitExceeded,
                   "unconstrained outcome search exhausted its budget");
  }
  report.best_outcome = outcome.profile;
  report.best_outcome_value = outcome.value;

  const double denominator = objective == MasterObjective::DefenderPayoff
                                 ? report.best_ne.defender_value
                                 : report.best_ne.attacker_value;
  if (denominator == 0.0) {
    report.price = std::numeric_limits<double>::infinity();
  } else {
    report.price = outcome.value / denominator;
  }
  return report;
}

}  // namespace

PriceReport price_of_security(const CngInstance& instance, const SolveConfig& config) {
  return price(instance, config, MasterObjective::DefenderPayoff);
}

PriceReport price_of_aggression(const CngInstance& instance, const SolveConfig& config) {
  return price(instance, config, MasterObjective::AttackerPayoff);
}

}  // namespace cng
