#ifndef CNG_MASTER_HPP
#define CNG_MASTER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cng/model.hpp"

namespace cng {

enum class PlayerRole { Defender, Attacker };

/// One equilibrium inequality, anchored to the deviation strategy that
/// produced it: f_owner(deviation, opponent) <= f_owner(profile) + Phi.
struct Cut {
  PlayerRole owner = PlayerRole::Defender;
  BinaryVector deviation;

  bool operator==(const Cut&) const = default;
};

/// Ordered, deduplicated collection of equilibrium inequalities.
class CutPool {
public:
  /// Returns false (and keeps the pool unchanged) when an identical
  /// (owner, deviation) cut is already present.
  bool add(Cut cut);

  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }

private:
  std::vector<Cut> cuts_;
};

enum class MasterObjective { DefenderPayoff, AttackerPayoff, SocialWelfare };

const char* to_string(MasterObjective objective);

double evaluate_objective(const CngInstance& instance,
                          MasterObjective objective,
                          const StrategyProfile& profile);

enum class MasterStatus { Optimal, Infeasible, Limit };

struct MasterLimits {
  double time_limit_s = 0.0;   // <= 0 means unlimited
  long long node_limit = 0;    // <= 0 means unlimited
};

struct MasterResult {
  MasterStatus status = MasterStatus::Infeasible;
  StrategyProfile profile;  // meaningful when status == Optimal, or Limit with has_incumbent
  double value = 0.0;
  bool has_incumbent = false;
  long long nodes_explored = 0;
};

/// Maximizes the chosen objective over the joint outcomes space subject to
/// every cut holding with slack phi_ub:
///   f_owner(deviation, opponent part) <= f_owner(x, alpha) + phi_ub.
///
/// Exact depth-first branch and bound over the 2n binary variables,
/// interleaving x_i and alpha_i node by node in descending p^d_i + p^a_i
/// order (ties by index). The upper bound at a partial assignment is the
/// decided contribution plus per-node optimistic cells, tightened by two
/// fractional-knapsack bounds on the residual budgets; each cut prunes via
/// its most permissive completion. Deterministic: first-found among equal
/// optima wins.
///
/// Infeasible certifies that no profile satisfies the cut system at slack
/// phi_ub. Hitting a node or time limit returns Limit with the best feasible
/// incumbent found, if any. warm_start, when given, seeds the incumbent if
/// it is budget- and cut-feasible.
MasterResult solve_master(const CngInstance& instance,
                          const CutPool& pool,
                          MasterObjective objective,
                          double phi_ub,
                          const MasterLimits& limits = {},
                          const StrategyProfile* warm_start = nullptr);

}  // namespace cng

#endif  // CNG_MASTER_HPP
