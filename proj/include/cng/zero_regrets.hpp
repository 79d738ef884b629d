#ifndef CNG_ZERO_REGRETS_HPP
#define CNG_ZERO_REGRETS_HPP

#include "cng/master.hpp"
#include "cng/model.hpp"

namespace cng {

struct SolveConfig {
  MasterObjective objective = MasterObjective::DefenderPayoff;
  double time_limit_s = 100.0;
  int max_iterations = 1000000;
  double phi_start = 0.0;
  /// Step added to the slack bound each time the master proves infeasibility.
  /// 1.0 suits integer-profit instances; for large payoff scales something
  /// near 1% of the total defender profit converges in fewer rounds.
  double phi_increment = 1.0;
  /// Deviation gaps at or below this count as "no profitable deviation".
  double ne_tolerance = kNeToleranceDefault;
  long long master_node_limit = 0;  // <= 0 means unlimited
};

enum class SolveStatus { ProvedOptimalNe, IncumbentOnLimit };

const char* to_string(SolveStatus status);

struct EquilibriumResult {
  StrategyProfile profile;
  double phi = 0.0;       // certified max deviation gap, recomputed at output
  bool exact = false;     // phi <= ne_tolerance
  double defender_value = 0.0;
  double attacker_value = 0.0;
  MasterObjective objective = MasterObjective::DefenderPayoff;
  double objective_value = 0.0;
  int iterations = 0;     // master solves, infeasible rounds included
  int cuts_added = 0;
  double phi_ub_final = 0.0;
  double wall_time_s = 0.0;
  SolveStatus status = SolveStatus::ProvedOptimalNe;
};

/// Cutting-plane equilibrium selection.
///
/// Repeatedly maximizes the objective over the joint outcomes space under the
/// accumulated equilibrium inequalities at slack phi_ub, then checks the
/// defender's and attacker's exact best responses against the candidate (in
/// that order). A profitable deviation beyond phi_ub + ne_tolerance becomes a
/// new inequality anchored to the deviating strategy; an infeasible master
/// raises phi_ub by phi_increment and keeps the pool (cuts carry the slack
/// variable, so they stay valid at larger bounds). Terminates with
/// ProvedOptimalNe when neither player deviates: no profile with a strictly
/// better objective satisfies the generated inequalities at that slack.
///
/// On any limit, returns IncumbentOnLimit carrying the best profile examined,
/// ordered by smallest certified gap, then largest objective value.
EquilibriumResult solve(const CngInstance& instance, const SolveConfig& config = {});

}  // namespace cng

#endif  // CNG_ZERO_REGRETS_HPP
