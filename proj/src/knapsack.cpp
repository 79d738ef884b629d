#include "cng/knapsack.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cng {

namespace {

struct Item {
  int index;      // position in the original problem
  double value;   // > 0 after filtering
  double weight;  // > 0
};

struct Search {
  const std::vector<Item>& items;
  double capacity;
  double best_value = 0.0;
  std::vector<int> best_take;     // indices into items
  std::vector<int> current_take;

  // Fractional (Dantzig) bound on the best completion from item k onward,
  // items already sorted by decreasing value/weight.
  double bound_from(std::size_t k, double value, double room) const {
    double bound = value;
    for (std::size_t j = k; j < items.size(); ++j) {
      if (items[j].weight <= room) {
        room -= items[j].weight;
        bound += items[j].value;
      } else {
        bound += items[j].value * (room / items[j].weight);
        break;
      }
    }
    return bound;
  }

  void dfs(std::size_t k, double value, double used) {
    if (k == items.size()) {
      if (value > best_value) {
        best_value = value;
        best_take = current_take;
      }
      return;
    }
    if (bound_from(k, value, capacity + kFeasibilityTol - used) <= best_value + kBoundTol) {
      return;
    }
    // take first: the first leaf reached is the greedy solution
    if (used + items[k].weight <= capacity + kFeasibilityTol) {
      current_take.push_back(static_cast<int>(k));
      dfs(k + 1, value + items[k].value, used + items[k].weight);
      current_take.pop_back();
    }
    dfs(k + 1, value, used);
  }
};

}  // namespace

KnapsackSolution solve_knapsack(const KnapsackProblem& problem) {
  const std::size_t n = problem.values.size();
  if (problem.weights.size() != n) {
    throw CngError(ErrorCode::ShapeMismatch, "values and weights must have equal length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(problem.weights[i] > 0.0)) {
      throw CngError(ErrorCode::NonpositiveWeight,
                     "weight[" + std::to_string(i) + "] must be positive");
    }
  }

  std::vector<Item> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (problem.values[i] > 0.0) {
      items.push_back({static_cast<int>(i), problem.values[i], problem.weights[i]});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& lhs, const Item& rhs) {
    const double lr = lhs.value / lhs.weight;
    const double rr = rhs.value / rhs.weight;
    if (lr != rr) return lr > rr;
    return lhs.index < rhs.index;
  });

  Search search{items, problem.capacity};
  if (!items.empty()) {
    search.dfs(0, 0.0, 0.0);
  }

  KnapsackSolution solution;
  solution.selected.assign(n, 0);
  for (int k : search.best_take) {
    solution.selected[items[k].index] = 1;
  }
  // Recompute in index order so the objective matches a plain dot product.
  double objective = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (solution.selected[i]) objective += problem.values[i];
  }
  solution.objective = objective;
  return solution;
}

}  // namespace cng
