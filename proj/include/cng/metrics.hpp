#ifndef CNG_METRICS_HPP
#define CNG_METRICS_HPP

#include "cng/zero_regrets.hpp"

namespace cng {

struct PriceReport {
  double price = 0.0;            // +infinity when the equilibrium payoff is 0
  StrategyProfile best_outcome;  // unconstrained maximizer over the joint space
  double best_outcome_value = 0.0;
  EquilibriumResult best_ne;
};

/// Price of Security: best defender payoff over the joint outcomes space
/// divided by the defender payoff at the best equilibrium the solver
/// certifies (at its final slack level, carried in best_ne.phi_ub_final).
PriceReport price_of_security(const CngInstance& instance, const SolveConfig& config = {});

/// Price of Aggression: the attacker-side counterpart.
PriceReport price_of_aggression(const CngInstance& instance, const SolveConfig& config = {});

}  // namespace cng

#endif  // CNG_METRICS_HPP
