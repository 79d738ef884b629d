#ifndef CNG_TEST_UTIL_HPP
#define CNG_TEST_UTIL_HPP

#include <random>
#include <string>

#include "cng/instance_gen.hpp"
#include "cng/io.hpp"
#include "cng/model.hpp"

namespace cng::test {

inline std::string data_path(const std::string& name) {
  return std::string(CNG_DATA_DIR) + "/" + name;
}

inline CngInstance example1() { return load_instance(data_path("example1.json")); }
inline CngInstance fixture_n2() { return load_instance(data_path("fixture_n2.json")); }
inline CngInstance fixture_cycle() { return load_instance(data_path("fixture_cycle.json")); }

/// Random benchmark-grid instance; the draw that picks the grid cell is part
/// of the seed stream, so every seed maps to one reproducible instance.
inline CngInstance random_grid_instance(std::mt19937_64& rng, int n_min = 4, int n_max = 10) {
  GenSpec spec;
  spec.n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
  spec.gamma = (rng() % 2) ? 0.1 : 0.0;
  spec.eta = (rng() % 2) ? 0.8 : 0.6;
  spec.defender_budget_frac = (rng() % 2) ? 0.75 : 0.30;
  const int afrac = static_cast<int>(rng() % 3);
  spec.attacker_budget_frac = afrac == 0 ? 0.03 : (afrac == 1 ? 0.10 : 0.30);
  spec.seed = rng();
  return generate(spec);
}

inline BinaryVector random_bits(std::mt19937_64& rng, int n) {
  BinaryVector bits(n);
  for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(rng() % 2);
  return bits;
}

/// Random profile feasible for both budgets (greedy repair of a random draw).
inline StrategyProfile random_feasible_profile(std::mt19937_64& rng,
                                               const CngInstance& instance) {
  StrategyProfile profile{random_bits(rng, instance.n), random_bits(rng, instance.n)};
  double used = 0.0;
  for (int i = 0; i < instance.n; ++i) {
    if (profile.defense[i]) {
      if (used + instance.defender_weights[i] > instance.defender_budget + kFeasibilityTol) {
        profile.defense[i] = 0;
      } else {
        used += instance.defender_weights[i];
      }
    }
  }
  used = 0.0;
  for (int i = 0; i < instance.n; ++i) {
    if (profile.attack[i]) {
      if (used + instance.attacker_weights[i] > instance.attacker_budget + kFeasibilityTol) {
        profile.attack[i] = 0;
      } else {
        used += instance.attacker_weights[i];
      }
    }
  }
  return profile;
}

}  // namespace cng::test

#endif  // CNG_TEST_UTIL_HPP
