#include "cng/oracle.hpp"

namespace cng::oracle::reference {

double min_phi(const CngInstance& instance, const StrategyProfile& profile,
               const Options& options) {
  const auto defenses = enumerate_feasible(instance.defender_weights,
                                           instance.defender_budget, instance.n,
                                           options.enumerate_cap);
  const auto attacks = enumerate_feasible(instance.attacker_weights,
                                          instance.attacker_budget, instance.n,
                                          options.enumerate_cap);
  const double fd = defender_payoff(instance, profile);
  const double fa = attacker_payoff(instance, profile);
  double phi = 0.0;
  for (const BinaryVector& defense : defenses) {
    phi = std::max(phi, defender_payoff(instance, defense, profile.attack) - fd);
  }
  for (const BinaryVector& attack : attacks) {
    phi = std::max(phi, attacker_payoff(instance, profile.defense, attack) - fa);
  }
  return phi;
}

std::vector<StrategyProfile> all_exact_ne(const CngInstance& instance,
                                          const Options& options) {
  validate(instance);
  if (instance.n > options.equilibria_cap) {
    throw CngError(ErrorCode::SizeLimitExceeded, "equilibrium enumeration cap exceeded");
  }
  const auto defenses = enumerate_feasible(instance.defender_weights,
                                           instance.defender_budget, instance.n,
                                           options.equilibria_cap);
  const auto attacks = enumerate_feasible(instance.attacker_weights,
                                          instance.attacker_budget, instance.n,
                                          options.equilibria_cap);

  // Plain reading of the equilibrium conditions: a profile is kept when no
  // unilateral deviation beats it by more than kExactTol.
  std::vector<StrategyProfile> equilibria;
  for (const BinaryVector& defense : defenses) {
    for (const BinaryVector& attack : attacks) {
      const double fd = defender_payoff(instance, defense, attack);
      const double fa = attacker_payoff(instance, defense, attack);
      bool stable = true;
      for (const BinaryVector& other : defenses) {
        if (defender_payoff(instance, other, attack) - fd > kExactTol) {
          stable = false;
          break;
        }
      }
      if (!stable) continue;
      for (const BinaryVector& other : attacks) {
        if (attacker_payoff(instance, defense, other) - fa > kExactTol) {
          stable = false;
          break;
        }
      }
      if (stable) equilibria.push_back({defense, attack});
    }
  }
  return equilibria;
}

}  // namespace cng::oracle::reference
