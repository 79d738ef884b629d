#include "cng/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cng::oracle {

std::vector<BinaryVector> enumerate_feasible(std::span<const double> weights,
                                             double capacity, int n, int cap) {
  if (n > cap) {
    throw CngError(ErrorCode::SizeLimitExceeded,
                   "enumeration over n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  }
  if (n < 0 || weights.size() != static_cast<std::size_t>(n)) {
    throw CngError(ErrorCode::ShapeMismatch, "weights must have length n");
  }
  std::vector<BinaryVector> feasible;
  const std::uint64_t total = std::uint64_t{1} << n;
  BinaryVector current(n, 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double used = 0.0;
    for (int i = 0; i < n; ++i) {
      current[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
      if (current[i]) used += weights[i];
    }
    if (used <= capacity + kFeasibilityTol) feasible.push_back(current);
  }
  return feasible;
}

double best_response_value_defender(const CngInstance& instance,
                                    std::span<const std::uint8_t> attack,
                                    const Options& options) {
  const auto defenses = enumerate_feasible(instance.defender_weights,
                                           instance.defender_budget, instance.n,
                                           options.enumerate_cap);
  double best = -std::numeric_limits<double>::infinity();
  for (const BinaryVector& defense : defenses) {
    best = std::max(best, defender_payoff(instance, defense, attack));
  }
  return best;
}

double best_response_value_attacker(const CngInstance& instance,
                                    std::span<const std::uint8_t> defense,
                                    const Options& options) {
  const auto attacks = enumerate_feasible(instance.attacker_weights,
                                          instance.attacker_budget, instance.n,
                                          options.enumerate_cap);
  double best = -std::numeric_limits<double>::infinity();
  for (const BinaryVector& attack : attacks) {
    best = std::max(best, attacker_payoff(instance, defense, attack));
  }
  return best;
}

double min_phi(const CngInstance& instance, const StrategyProfile& profile,
               const Options& options) {
  const double fd = defender_payoff(instance, profile);
  const double fa = attacker_payoff(instance, profile);
  const double brd = best_response_value_defender(instance, profile.attack, options);
  const double bra = best_response_value_attacker(instance, profile.defense, options);
  return std::max({0.0, brd - fd, bra - fa});
}

std::vector<StrategyProfile> all_exact_ne(const CngInstance& instance,
                                          const Options& options) {
  validate(instance);
  if (instance.n > options.equilibria_cap) {
    throw CngError(ErrorCode::SizeLimitExceeded,
                   "equilibrium enumeration over n = " + std::to_string(instance.n) +
                       " exceeds cap " + std::to_string(options.equilibria_cap));
  }
  const auto defenses = enumerate_feasible(instance.defender_weights,
                                           instance.defender_budget, instance.n,
                                           options.equilibria_cap);
  const auto attacks = enumerate_feasible(instance.attacker_weights,
                                          instance.attacker_budget, instance.n,
                                          options.equilibria_cap);
  const long long num_defenses = static_cast<long long>(defenses.size());
  const long long num_attacks = static_cast<long long>(attacks.size());

  // Per-opponent best-response rows. Each entry is an order-independent max,
  // so the parallel result is bit-identical to the serial one.
  std::vector<double> best_def(num_attacks, -std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < num_attacks; ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (const BinaryVector& defense : defenses) {
      best = std::max(best, defender_payoff(instance, defense, attacks[j]));
    }
    best_def[j] = best;
  }

  std::vector<double> best_atk(num_defenses, -std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < num_defenses; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (const BinaryVector& attack : attacks) {
      best = std::max(best, attacker_payoff(instance, defenses[i], attack));
    }
    best_atk[i] = best;
  }

  // Membership pass; hits are collected per defense row, so the final
  // concatenation is lexicographic no matter how rows were scheduled.
  std::vector<std::vector<long long>> hits(num_defenses);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < num_defenses; ++i) {
    for (long long j = 0; j < num_attacks; ++j) {
      const double fd = defender_payoff(instance, defenses[i], attacks[j]);
      const double fa = attacker_payoff(instance, defenses[i], attacks[j]);
      if (best_def[j] - fd <= kExactTol && best_atk[i] - fa <= kExactTol) {
        hits[i].push_back(j);
      }
    }
  }

  std::vector<StrategyProfile> equilibria;
  for (long long i = 0; i < num_defenses; ++i) {
    for (long long j : hits[i]) {
      equilibria.push_back({defenses[i], attacks[j]});
    }
  }
  return equilibria;
}

BestNe best_equilibrium(const CngInstance& instance, MasterObjective objective,
                        const Options& options) {
  BestNe best;
  for (const StrategyProfile& profile : all_exact_ne(instance, options)) {
    const double value = evaluate_objective(instance, objective, profile);
    if (!best.exists || value > best.value) {
      best.exists = true;
      best.profile = profile;
      best.value = value;
    }
  }
  return best;
}

}  // namespace cng::oracle
