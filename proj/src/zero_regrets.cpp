#include "cng/zero_regrets.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "cng/best_response.hpp"

namespace cng {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::ProvedOptimalNe: return "PROVED_OPTIMAL_NE";
    case SolveStatus::IncumbentOnLimit: return "INCUMBENT_ON_LIMIT";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Incumbent {
  bool present = false;
  StrategyProfile profile;
  double phi = 0.0;
  double objective_value = 0.0;

  // Lexicographic: smallest certified gap, then largest objective value.
  void offer(const StrategyProfile& candidate, double candidate_phi, double value) {
    if (!present || candidate_phi < phi ||
        (candidate_phi == phi && value > objective_value)) {
      present = true;
      profile = candidate;
      phi = candidate_phi;
      objective_value = value;
    }
  }
};

bool log_enabled() {
  static const bool enabled = [] {
    const char* level = std::getenv("CNG_LOG");
    return level != nullptr && level[0] != '\0' && level[0] != '0';
  }();
  return enabled;
}

}  // namespace

EquilibriumResult solve(const CngInstance& instance, const SolveConfig& config) {
  validate(instance);
  if (config.max_iterations <= 0 || config.time_limit_s <= 0.0 ||
      config.phi_increment <= 0.0 || config.phi_start < 0.0 || config.ne_tolerance < 0.0) {
    throw CngError(ErrorCode::InvalidArgument, "solve limits must be positive");
  }

  const Clock::time_point start = Clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  CutPool pool;
  double phi_ub = config.phi_start;
  Incumbent incumbent;
  int iterations = 0;
  int cuts_added = 0;
  bool hit_limit = false;
  StrategyProfile warm;
  bool have_warm = false;

  while (true) {
    if (iterations >= config.max_iterations || elapsed() >= config.time_limit_s) {
      hit_limit = true;
      break;
    }
    MasterLimits limits;
    limits.time_limit_s = config.time_limit_s - elapsed();
    limits.node_limit = config.master_node_limit;
    const MasterResult master = solve_master(instance, pool, config.objective, phi_ub,
                                             limits, have_warm ? &warm : nullptr);
    ++iterations;

    if (master.status == MasterStatus::Infeasible) {
      phi_ub += config.phi_increment;
      if (log_enabled()) {
        std::fprintf(stderr, "[cng] iter %d: master infeasible, phi_ub -> %g\n",
                     iterations, phi_ub);
      }
      continue;
    }

    const StrategyProfile& candidate = master.profile;
    const bool timed_out = master.status == MasterStatus::Limit;
    if (timed_out && !master.has_incumbent) {
      hit_limit = true;
      break;
    }

    const double fd = defender_payoff(instance, candidate);
    const double fa = attacker_payoff(instance, candidate);
    const BestResponse def_br = defender_best_response(instance, candidate.attack);
    const BestResponse atk_br = attacker_best_response(instance, candidate.defense);
    const double gap = std::max({0.0, def_br.value - fd, atk_br.value - fa});
    incumbent.offer(candidate, gap,
                    evaluate_objective(instance, config.objective, candidate));
    if (log_enabled()) {
      std::fprintf(stderr,
                   "[cng] iter %d: master value %.6g, gap %.6g, phi_ub %g, cuts %d\n",
                   iterations, master.value, gap, phi_ub, cuts_added);
    }
    if (timed_out) {
      hit_limit = true;
      break;
    }

    if (def_br.value > fd + phi_ub + config.ne_tolerance) {
      // Defender deviates; checked first, the attacker only when this passes.
      if (!pool.add({PlayerRole::Defender, def_br.strategy})) {
        hit_limit = true;  // duplicate cut: numerical stall, keep the incumbent
        break;
      }
      ++cuts_added;
      warm.defense = def_br.strategy;
      warm.attack = candidate.attack;
      have_warm = true;
      continue;
    }
    if (atk_br.value > fa + phi_ub + config.ne_tolerance) {
      if (!pool.add({PlayerRole::Attacker, atk_br.strategy})) {
        hit_limit = true;
        break;
      }
      ++cuts_added;
      warm.defense = candidate.defense;
      warm.attack = atk_br.strategy;
      have_warm = true;
      continue;
    }

    // Neither player deviates beyond phi_ub: optimal over the cut system.
    EquilibriumResult result;
    result.profile = candidate;
    result.phi = gap;
    result.exact = gap <= config.ne_tolerance;
    result.defender_value = fd;
    result.attacker_value = fa;
    result.objective = config.objective;
    result.objective_value = evaluate_objective(instance, config.objective, candidate);
    result.iterations = iterations;
    result.cuts_added = cuts_added;
    result.phi_ub_final = phi_ub;
    result.wall_time_s = elapsed();
    result.status = SolveStatus::ProvedOptimalNe;
    return result;
  }

  (void)hit_limit;
  if (!incumbent.present) {
    // Nothing examined yet: fall back to the unconstrained maximizer over the
    // joint outcomes space, or the idle profile if even that is cut short.
    MasterLimits limits;
    limits.time_limit_s = std::max(0.1, config.time_limit_s - elapsed());
    const MasterResult unconstrained =
        solve_master(instance, CutPool{}, config.objective, 0.0, limits);
    StrategyProfile fallback;
    if (unconstrained.has_incumbent) {
      fallback = unconstrained.profile;
    } else {
      fallback.defense.assign(instance.n, 0);
      fallback.attack.assign(instance.n, 0);
    }
    const double fd = defender_payoff(instance, fallback);
    const double fa = attacker_payoff(instance, fallback);
    const double gap = std::max({0.0, defender_best_response(instance, fallback.attack).value - fd,
                                 attacker_best_response(instance, fallback.defense).value - fa});
    incumbent.offer(fallback, gap, evaluate_objective(instance, config.objective, fallback));
  }

  EquilibriumResult result;
  result.profile = incumbent.profile;
  const double fd = defender_payoff(instance, result.profile);
  const double fa = attacker_payoff(instance, result.profile);
  result.phi = std::max({0.0, defender_best_response(instance, result.profile.attack).value - fd,
                         attacker_best_response(instance, result.profile.defense).value - fa});
  result.exact = result.phi <= config.ne_tolerance;
  result.defender_value = fd;
  result.attacker_value = fa;
  result.objective = config.objective;
  result.objective_value = evaluate_objective(instance, config.objective, result.profile);
  result.iterations = iterations;
  result.cuts_added = cuts_added;
  result.phi_ub_final = phi_ub;
  result.wall_time_s = elapsed();
  result.status = SolveStatus::IncumbentOnLimit;
  return result;
}

}  // namespace cng
