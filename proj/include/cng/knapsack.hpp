#ifndef CNG_KNAPSACK_HPP
#define CNG_KNAPSACK_HPP

#include <vector>

#include "cng/model.hpp"

namespace cng {

/// 0/1 knapsack with real-valued item values (possibly negative) and
/// strictly positive real weights.
struct KnapsackProblem {
  std::vector<double> values;
  std::vector<double> weights;
  double capacity = 0.0;
};

struct KnapsackSolution {
  BinaryVector selected;
  double objective = 0.0;
};

/// Exact maximizer of values . s over binary s with weights . s <= capacity
/// (absolute tolerance kFeasibilityTol).
///
/// Depth-first branch and bound in decreasing value/weight order with the
/// fractional (Dantzig) relaxation as upper bound. Items with value <= 0 are
/// dropped up front: they can never improve the objective, and dropping them
/// keeps the reported optimum at the smallest support. Deterministic: among
/// equal-objective solutions, returns the first found under the fixed
/// ratio-then-lowest-index branching order.
KnapsackSolution solve_knapsack(const KnapsackProblem& problem);

}  // namespace cng

#endif  // CNG_KNAPSACK_HPP
