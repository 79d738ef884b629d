#include "cng/best_response.hpp"

#include "cng/knapsack.hpp"

namespace cng {

BestResponse defender_best_response(const CngInstance& instance,
                                    std::span<const std::uint8_t> attack) {
  const int n = instance.n;
  if (attack.size() != static_cast<std::size_t>(n)) {
    throw CngError(ErrorCode::ShapeMismatch, "attack vector must have length n");
  }

  // Baseline: defend nothing. Matches the cell sum of defender_payoff at x = 0.
  double base = 0.0;
  KnapsackProblem knap;
  knap.values.resize(n);
  knap.weights = instance.defender_weights;
  knap.capacity = instance.defender_budget;
  for (int i = 0; i < n; ++i) {
    const double pd = instance.defender_profits[i];
    if (attack[i]) {
      base += instance.delta * pd;
      knap.values[i] = (instance.eta - instance.delta) * pd;
    } else {
      base += pd;
      knap.values[i] = (instance.epsilon - 1.0) * pd;
    }
  }

  KnapsackSolution packed = solve_knapsack(knap);
  return {std::move(packed.selected), base + packed.objective};
}

BestResponse attacker_best_response(const CngInstance& instance,
                                    std::span<const std::uint8_t> defense) {
  const int n = instance.n;
  if (defense.size() != static_cast<std::size_t>(n)) {
    throw CngError(ErrorCode::ShapeMismatch, "defense vector must have length n");
  }

  double base = 0.0;
  KnapsackProblem knap;
  knap.values.resize(n);
  knap.weights = instance.attacker_weights;
  knap.capacity = instance.attacker_budget;
  for (int i = 0; i < n; ++i) {
    const double pa = instance.attacker_profits[i];
    if (defense[i]) {
      knap.values[i] = (1.0 - instance.eta) * pa;
    } else {
      base += -instance.gamma * pa;
      knap.values[i] = (1.0 + instance.gamma) * pa;
    }
  }

  KnapsackSolution packed = solve_knapsack(knap);
  return {std::move(packed.selected), base + packed.objective};
}

}  // namespace cng
