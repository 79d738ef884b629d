#ifndef CNG_MODEL_HPP
#define CNG_MODEL_HPP

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "cng/common.hpp"

namespace cng {

using BinaryVector = std::vector<std::uint8_t>;

/// One edge of the originating network, kept for provenance only.
/// The solver never reads topology: payoffs are node-separable.
struct Edge {
  int u = 0;
  int v = 0;
  double traffic = 0.0;
};

/// A critical node game over n nodes.
///
/// The defender picks a binary protection vector x with d'x <= defender_budget,
/// the attacker a binary attack vector alpha with a'alpha <= attacker_budget.
/// Each node contributes to the two payoffs according to the four-cell scheme
/// parametrized by (delta, eta, epsilon, gamma); see evaluate_cell.
struct CngInstance {
  int n = 0;
  std::vector<double> defender_profits;  // p^d, criticality of each node for the defender
  std::vector<double> attacker_profits;  // p^a, projected criticality for the attacker
  std::vector<double> defender_weights;  // d, cost of protecting each node
  std::vector<double> attacker_weights;  // a, cost of attacking each node
  double defender_budget = 0.0;          // D
  double attacker_budget = 0.0;          // A
  double delta = 0.0;    // defender value retained under a successful attack
  double eta = 0.0;      // defender value retained under a mitigated attack
  double epsilon = 0.0;  // defender value retained when protecting an unattacked node
  double gamma = 0.0;    // attacker opportunity-cost rate on untouched nodes
  std::vector<Edge> edges;  // optional provenance from ingestion
};

struct StrategyProfile {
  BinaryVector defense;  // x
  BinaryVector attack;   // alpha

  bool operator==(const StrategyProfile&) const = default;
};

/// Per-node payoff contributions under one (x_i, alpha_i) combination.
struct PayoffCell {
  double defender_value = 0.0;
  double attacker_value = 0.0;
};

/// Throws CngError unless all instance invariants hold:
/// 0 <= delta < eta < epsilon <= 1, 0 <= gamma <= 1, consistent vector
/// shapes, strictly positive weights, nonnegative budgets and profits.
void validate(const CngInstance& instance);

/// Payoff contributions of node i under (x_i, alpha_i):
///   (0,0) normal operations      -> (p^d_i,        -gamma p^a_i)
///   (0,1) successful attack      -> (delta p^d_i,   p^a_i)
///   (1,1) mitigated attack       -> (eta p^d_i,     (1-eta) p^a_i)
///   (1,0) mitigation, no attack  -> (epsilon p^d_i, 0)
PayoffCell evaluate_cell(const CngInstance& instance, int i, bool x_i, bool alpha_i);

/// Total defender payoff. Defined on any pair of binary vectors of length n,
/// feasible or not, so deviations can be evaluated freely.
double defender_payoff(const CngInstance& instance,
                       std::span<const std::uint8_t> defense,
                       std::span<const std::uint8_t> attack);
double defender_payoff(const CngInstance& instance, const StrategyProfile& profile);

/// Total attacker payoff; same totality contract as defender_payoff.
double attacker_payoff(const CngInstance& instance,
                       std::span<const std::uint8_t> defense,
                       std::span<const std::uint8_t> attack);
double attacker_payoff(const CngInstance& instance, const StrategyProfile& profile);

/// True iff weights . selection <= budget + kFeasibilityTol.
bool within_budget(std::span<const double> weights,
                   std::span<const std::uint8_t> selection,
                   double budget);

/// True iff both players' budget constraints hold for the profile.
bool is_feasible(const CngInstance& instance, const StrategyProfile& profile);

}  // namespace cng

#endif  // CNG_MODEL_HPP
