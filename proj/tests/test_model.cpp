#include <random>

#include "cng/model.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cng;

TEST_CASE("validate accepts the bundled five-node instance") {
  CHECK_NOTHROW(validate(test::example1()));
}

TEST_CASE("validate rejects a non-strict factor ordering") {
  CngInstance instance = test::example1();
  instance.delta = 0.5;
  instance.eta = 0.5;
  instance.epsilon = 0.6;
  CHECK_THROWS_WITH_AS(validate(instance), doctest::Contains("ORDERING_VIOLATION"), CngError);
  try {
    validate(instance);
  } catch (const CngError& error) {
    CHECK(error.code() == ErrorCode::OrderingViolation);
  }
}

TEST_CASE("validate rejects factors outside the unit interval") {
  CngInstance instance = test::example1();
  instance.epsilon = 1.1;
  try {
    validate(instance);
    FAIL("expected RANGE_VIOLATION");
  } catch (const CngError& error) {
    CHECK(error.code() == ErrorCode::RangeViolation);
  }
}

TEST_CASE("validate rejects shape and weight violations") {
  CngInstance instance = test::example1();
  instance.defender_profits.pop_back();
  try {
    validate(instance);
    FAIL("expected SHAPE_MISMATCH");
  } catch (const CngError& error) {
    CHECK(error.code() == ErrorCode::ShapeMismatch);
  }

  instance = test::example1();
  instance.attacker_weights[2] = 0.0;
  try {
    validate(instance);
    FAIL("expected NONPOSITIVE_WEIGHT");
  } catch (const CngError& error) {
    CHECK(error.code() == ErrorCode::NonpositiveWeight);
  }
}

TEST_CASE("evaluate_cell matches the four-cell scheme") {
  const CngInstance instance = test::example1();

  const PayoffCell mitigated = evaluate_cell(instance, 2, true, true);
  CHECK(mitigated.defender_value == doctest::Approx(12.0).epsilon(1e-12));  // 0.40 * 30
  CHECK(mitigated.attacker_value == doctest::Approx(0.6 * 18.0).epsilon(1e-12));

  for (int i = 0; i < instance.n; ++i) {
    CHECK(evaluate_cell(instance, i, true, false).attacker_value == 0.0);
  }

  CngInstance zeroed = instance;
  zeroed.attacker_profits[1] = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      CHECK(evaluate_cell(zeroed, 1, x, a).attacker_value == 0.0);
    }
  }

  CHECK_THROWS_AS(evaluate_cell(instance, 5, false, false), CngError);
  CHECK_THROWS_AS(evaluate_cell(instance, -1, false, false), CngError);
}

TEST_CASE("published payoffs of the bundled instance") {
  const CngInstance instance = test::example1();
  const StrategyProfile eq1{{1, 1, 1, 0, 1}, {0, 0, 1, 0, 1}};
  const StrategyProfile eq2{{0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}};

  CHECK(defender_payoff(instance, eq1) == doctest::Approx(29.2).epsilon(1e-12));
  CHECK(defender_payoff(instance, eq2) == doctest::Approx(29.2).epsilon(1e-12));
  CHECK(attacker_payoff(instance, eq1) == doctest::Approx(13.74).epsilon(1e-12));
  CHECK(attacker_payoff(instance, eq2) == doctest::Approx(12.18).epsilon(1e-12));

  const StrategyProfile idle{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
  CHECK(defender_payoff(instance, idle) == doctest::Approx(52.0).epsilon(1e-12));
  CHECK(attacker_payoff(instance, idle) ==
        doctest::Approx(-instance.gamma * 48.0).epsilon(1e-12));

  const StrategyProfile all_attacked{{0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}};
  CHECK(defender_payoff(instance, all_attacked) ==
        doctest::Approx(instance.delta * 52.0).epsilon(1e-12));
}

TEST_CASE("payoff functions are total but reject shape mismatches") {
  const CngInstance instance = test::example1();
  const StrategyProfile infeasible{{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}};
  CHECK_NOTHROW(defender_payoff(instance, infeasible));  // d.x = 31 <= 40, a.alpha = 27 > 25.5
  CHECK_FALSE(is_feasible(instance, infeasible));

  StrategyProfile bad{{1, 1}, {0, 0, 1, 0, 1}};
  CHECK_THROWS_AS(defender_payoff(instance, bad), CngError);
  CHECK_THROWS_AS(attacker_payoff(instance, bad), CngError);
}

TEST_CASE("budget feasibility uses an absolute 1e-9 tolerance") {
  const CngInstance instance = test::fixture_n2();
  StrategyProfile profile{{1, 0}, {0, 0}};
  CHECK(is_feasible(instance, profile));
  profile.defense = {1, 1};  // weight 2 > budget 1
  CHECK_FALSE(is_feasible(instance, profile));

  CngInstance tight = instance;
  tight.defender_budget = 2.0 - 0.5e-9;
  CHECK(is_feasible(tight, profile));
}

TEST_CASE("cell consistency: payoffs equal their cell sums") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    const CngInstance instance = test::random_grid_instance(rng);
    const StrategyProfile profile{test::random_bits(rng, instance.n),
                                  test::random_bits(rng, instance.n)};
    double def_sum = 0.0, atk_sum = 0.0;
    for (int i = 0; i < instance.n; ++i) {
      const PayoffCell cell = evaluate_cell(instance, i, profile.defense[i], profile.attack[i]);
      def_sum += cell.defender_value;
      atk_sum += cell.attacker_value;
    }
    CHECK(defender_payoff(instance, profile) == doctest::Approx(def_sum).epsilon(1e-12));
    CHECK(attacker_payoff(instance, profile) == doctest::Approx(atk_sum).epsilon(1e-12));
  }
}

TEST_CASE("flip properties: monotone damage and attacker incentives") {
  std::mt19937_64 rng(987123);
  for (int round = 0; round < 100; ++round) {
    const CngInstance instance = test::random_grid_instance(rng);
    StrategyProfile profile{test::random_bits(rng, instance.n),
                            test::random_bits(rng, instance.n)};
    const int i = static_cast<int>(rng() % instance.n);
    const double pd = instance.defender_profits[i];
    const double pa = instance.attacker_profits[i];

    // attacking an undefended node costs the defender p^d_i (1 - delta)
    profile.defense[i] = 0;
    profile.attack[i] = 0;
    const double fd0 = defender_payoff(instance, profile);
    const double fa0 = attacker_payoff(instance, profile);
    profile.attack[i] = 1;
    const double fd1 = defender_payoff(instance, profile);
    const double fa1 = attacker_payoff(instance, profile);
    CHECK(fd1 - fd0 == doctest::Approx(pd * (instance.delta - 1.0)).epsilon(1e-9));
    CHECK(fd1 <= fd0 + 1e-12);
    CHECK(fa1 - fa0 == doctest::Approx(pa * (1.0 + instance.gamma)).epsilon(1e-9));
    CHECK(fa1 >= fa0 - 1e-12);

    // attacking a defended node still never hurts the attacker
    profile.defense[i] = 1;
    profile.attack[i] = 0;
    const double ga0 = attacker_payoff(instance, profile);
    profile.attack[i] = 1;
    const double ga1 = attacker_payoff(instance, profile);
    CHECK(ga1 - ga0 == doctest::Approx(pa * (1.0 - instance.eta)).epsilon(1e-9));
    CHECK(ga1 >= ga0 - 1e-12);
  }
}

TEST_CASE("profile-flip identity: dropping an idle defense costs gamma p^a") {
  const CngInstance instance = test::example1();
  const StrategyProfile eq1{{1, 1, 1, 0, 1}, {0, 0, 1, 0, 1}};
  StrategyProfile flipped = eq1;
  flipped.defense[0] = 0;  // node 1 is unattacked: attacker regains its opportunity cost
  const double drop = attacker_payoff(instance, eq1) - attacker_payoff(instance, flipped);
  CHECK(drop == doctest::Approx(instance.gamma * instance.attacker_profits[0]).epsilon(1e-12));
}
