#include <random>

#include "cng/best_response.hpp"
#include "cng/knapsack.hpp"
#include "cng/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cng;

TEST_CASE("defender best response to the published attack") {
  const CngInstance instance = test::example1();
  const BinaryVector attack{0, 0, 1, 0, 1};
  const BestResponse br = defender_best_response(instance, attack);
  // base 16.28 for x = 0, plus 0.34 * 30 + 0.34 * 8 from protecting the attacked nodes
  CHECK(br.value == doctest::Approx(29.2).epsilon(1e-12));
  CHECK(br.strategy == BinaryVector{0, 0, 1, 0, 1});
}

TEST_CASE("with epsilon < 1 an unattacked node is never protected") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 80; ++round) {
    CngInstance instance = test::random_grid_instance(rng);
    if (instance.epsilon >= 1.0) {
      instance.eta = 0.6;
      instance.epsilon = 0.75;
      instance.delta = 0.48;
    }
    const BinaryVector attack = test::random_bits(rng, instance.n);
    const BestResponse br = defender_best_response(instance, attack);
    for (int i = 0; i < instance.n; ++i) {
      if (!attack[i]) CHECK_FALSE(br.strategy[i]);
    }
  }
}

TEST_CASE("no attack: dominance and the epsilon = 1 indifference plateau") {
  CngInstance instance = test::example1();
  const BinaryVector no_attack(instance.n, 0);

  // epsilon = 1: protecting is value-neutral, canonical answer leaves x = 0
  BestResponse br = defender_best_response(instance, no_attack);
  CHECK(br.value == doctest::Approx(52.0).epsilon(1e-12));
  CHECK(br.strategy == BinaryVector(instance.n, 0));

  instance.epsilon = 0.9;
  br = defender_best_response(instance, no_attack);
  CHECK(br.value == doctest::Approx(52.0).epsilon(1e-12));
  CHECK(br.strategy == BinaryVector(instance.n, 0));
}

TEST_CASE("attacker best response to the published defense") {
  const CngInstance instance = test::example1();
  const BinaryVector defense{1, 1, 1, 0, 1};
  const BestResponse br = attacker_best_response(instance, defense);
  // The stored deviation behind the fixture's attacker-side gap: even at the
  // published profile the attacker can reach 27.6 by attacking {2,3,4,5}.
  CHECK(br.value == doctest::Approx(27.6).epsilon(1e-12));
  CHECK(br.strategy == BinaryVector{0, 1, 1, 1, 1});
}

TEST_CASE("attacker best response closed forms") {
  CngInstance instance = test::example1();

  // undefended network, slack budget: attack every profitable node
  instance.attacker_budget = 100.0;
  const BinaryVector no_defense(instance.n, 0);
  BestResponse br = attacker_best_response(instance, no_defense);
  CHECK(br.value == doctest::Approx(48.0).epsilon(1e-12));  // sum of p^a
  CHECK(br.strategy == BinaryVector(instance.n, 1));

  // fully defended network: baseline 0, value (1 - eta) * best knapsack
  instance = test::example1();
  const BinaryVector all_defense(instance.n, 1);
  br = attacker_best_response(instance, all_defense);
  KnapsackProblem residual;
  residual.values = instance.attacker_profits;
  residual.weights = instance.attacker_weights;
  residual.capacity = instance.attacker_budget;
  const double packed = solve_knapsack(residual).objective;
  CHECK(br.value == doctest::Approx((1.0 - instance.eta) * packed).epsilon(1e-9));
}

TEST_CASE("best responses dominate every enumerated strategy") {
  std::mt19937_64 rng(90210);
  for (int round = 0; round < 60; ++round) {
    const CngInstance instance = test::random_grid_instance(rng, 4, 9);
    const StrategyProfile profile = test::random_feasible_profile(rng, instance);

    const BestResponse def_br = defender_best_response(instance, profile.attack);
    const double def_oracle =
        oracle::best_response_value_defender(instance, profile.attack);
    CHECK(def_br.value == doctest::Approx(def_oracle).epsilon(1e-12));
    CHECK(within_budget(instance.defender_weights, def_br.strategy,
                        instance.defender_budget));

    const BestResponse atk_br = attacker_best_response(instance, profile.defense);
    const double atk_oracle =
        oracle::best_response_value_attacker(instance, profile.defense);
    CHECK(atk_br.value == doctest::Approx(atk_oracle).epsilon(1e-12));
    CHECK(within_budget(instance.attacker_weights, atk_br.strategy,
                        instance.attacker_budget));
  }
}

TEST_CASE("attacker best response saturates the budget") {
  std::mt19937_64 rng(555);
  for (int round = 0; round < 60; ++round) {
    const CngInstance instance = test::random_grid_instance(rng);
    const StrategyProfile profile = test::random_feasible_profile(rng, instance);
    const BestResponse br = attacker_best_response(instance, profile.defense);
    double used = 0.0;
    for (int i = 0; i < instance.n; ++i) {
      if (br.strategy[i]) used += instance.attacker_weights[i];
    }
    for (int i = 0; i < instance.n; ++i) {
      if (br.strategy[i]) continue;
      const double gain = profile.defense[i]
                              ? (1.0 - instance.eta) * instance.attacker_profits[i]
                              : (1.0 + instance.gamma) * instance.attacker_profits[i];
      if (gain > 0.0) {
        CHECK(used + instance.attacker_weights[i] >
              instance.attacker_budget + kFeasibilityTol);
      }
    }
  }
}
