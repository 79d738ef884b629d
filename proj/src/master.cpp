#include "cng/master.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

namespace cng {

bool CutPool::add(Cut cut) {
  for (const Cut& existing : cuts_) {
    if (existing == cut) return false;
  }
  cuts_.push_back(std::move(cut));
  return true;
}

const char* to_string(MasterObjective objective) {
  switch (objective) {
    case MasterObjective::DefenderPayoff: return "defender";
    case MasterObjective::AttackerPayoff: return "attacker";
    case MasterObjective::SocialWelfare: return "social";
  }
  return "unknown";
}

double evaluate_objective(const CngInstance& instance,
                          MasterObjective objective,
                          const StrategyProfile& profile) {
  switch (objective) {
    case MasterObjective::DefenderPayoff:
      return defender_payoff(instance, profile);
    case MasterObjective::AttackerPayoff:
      return attacker_payoff(instance, profile);
    case MasterObjective::SocialWelfare:
      return defender_payoff(instance, profile) + attacker_payoff(instance, profile);
  }
  return 0.0;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();
// Cut slacks closer to the tolerance boundary than this get re-verified with
// full payoff evaluations before a leaf is accepted.
constexpr double kGrayZone = 1e-7;
constexpr int kSubgradientRounds = 120;

// cell index = (x << 1) | alpha
inline int cell_of(int x, int a) { return (x << 1) | a; }

// Sorted fractional-knapsack prefix over a fixed suffix of the branch order.
struct FracTable {
  std::vector<double> prefix_gain;
  std::vector<double> prefix_weight;
  std::vector<double> gains;
  std::vector<double> weights;

  // Dantzig bound for the residual capacity.
  double bound(double capacity) const {
    if (capacity <= 0.0 || gains.empty()) return 0.0;
    std::size_t lo = 0, hi = gains.size();  // largest j with prefix_weight[j] <= capacity
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (prefix_weight[mid] <= capacity) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    double value = prefix_gain[lo];
    if (lo < gains.size()) {
      const double room = capacity - prefix_weight[lo];
      if (room > 0.0) value += gains[lo] * (room / weights[lo]);
    }
    return value;
  }
};

// One relaxation the search bounds against: per-node 2x2 cell values plus a
// constant. The plain objective is one instance (constant 0); the Lagrangian
// relaxation obj + sum_c lambda_c (slack_c + phi_ub) is another, and both
// stay valid upper bounds at every partial assignment.
struct BoundTables {
  std::vector<double> cell;           // n x 4, by original node index
  double constant = 0.0;              // (sum lambda) * phi_ub for the Lagrangian
  std::vector<double> suffix_base;    // per perm position: sum of cell(0,0) onward
  std::vector<double> suffix_maxcell; // per perm position: sum of max cell onward
  std::vector<FracTable> frac_def;    // per perm position
  std::vector<FracTable> frac_atk;
};

struct Searcher {
  const CngInstance& instance;
  const std::vector<Cut>& cuts;
  MasterObjective objective;
  double phi_ub;
  MasterLimits limits;
  Clock::time_point start;

  int n = 0;
  std::size_t num_cuts = 0;
  std::vector<int> perm;          // branch order over nodes
  std::vector<double> obj_cell;   // n x 4 objective cell values, by original index
  std::vector<double> cut_term;   // num_cuts x n x 4, by original index
  std::vector<double> cut_max4;   // num_cuts x n: most permissive per-node term

  BoundTables plain;
  BoundTables lagrangian;
  bool use_lagrangian = false;

  BinaryVector xcur, acur;
  double d_used = 0.0, a_used = 0.0;
  double decided_obj = 0.0;   // plain cells of fully decided nodes
  double decided_lag = 0.0;   // Lagrangian cells of fully decided nodes
  std::vector<double> cut_opt;      // per cut: optimistic completion of its slack
  std::vector<double> cut_contrib;  // num_cuts x n: current per-node contribution
  std::vector<double> undo_contrib; // (2n x num_cuts) undo slots, indexed by depth
  std::vector<double> undo_opt;

  double best_value = -kInf;
  bool found = false;
  StrategyProfile best_profile;
  long long nodes = 0;
  bool limit_hit = false;

  Searcher(const CngInstance& inst, const std::vector<Cut>& cut_list,
           MasterObjective obj, double phi)
      : instance(inst), cuts(cut_list), objective(obj), phi_ub(phi),
        n(inst.n), num_cuts(cut_list.size()) {}

  double objective_cell(int i, int x, int a) const {
    const double pd = instance.defender_profits[i];
    const double pa = instance.attacker_profits[i];
    double def, atk;
    if (x) {
      def = a ? instance.eta * pd : instance.epsilon * pd;
      atk = a ? (1.0 - instance.eta) * pa : 0.0;
    } else {
      def = a ? instance.delta * pd : pd;
      atk = a ? pa : -instance.gamma * pa;
    }
    switch (objective) {
      case MasterObjective::DefenderPayoff: return def;
      case MasterObjective::AttackerPayoff: return atk;
      case MasterObjective::SocialWelfare: return def + atk;
    }
    return 0.0;
  }

  void prepare(double warm_value, bool have_warm) {
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int lhs, int rhs) {
      const double lp = instance.defender_profits[lhs] + instance.attacker_profits[lhs];
      const double rp = instance.defender_profits[rhs] + instance.attacker_profits[rhs];
      if (lp != rp) return lp > rp;
      return lhs < rhs;
    });

    obj_cell.resize(static_cast<std::size_t>(n) * 4);
    for (int i = 0; i < n; ++i) {
      for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a) obj_cell[i * 4 + cell_of(x, a)] = objective_cell(i, x, a);
    }

    cut_term.assign(num_cuts * n * 4, 0.0);
    cut_max4.assign(num_cuts * n, 0.0);
    for (std::size_t c = 0; c < num_cuts; ++c) {
      const Cut& cut = cuts[c];
      for (int i = 0; i < n; ++i) {
        for (int x = 0; x < 2; ++x) {
          for (int a = 0; a < 2; ++a) {
            // Slack contribution of node i: the profile's payoff cell minus the
            // cell the stored deviation realizes against the same opponent bit.
            double term;
            if (cut.owner == PlayerRole::Defender) {
              const double pd = instance.defender_profits[i];
              const double own = x ? (a ? instance.eta : instance.epsilon)
                                   : (a ? instance.delta : 1.0);
              const int dx = cut.deviation[i];
              const double dev = dx ? (a ? instance.eta : instance.epsilon)
                                    : (a ? instance.delta : 1.0);
              term = pd * (own - dev);
            } else {
              const double pa = instance.attacker_profits[i];
              const double own = x ? (a ? (1.0 - instance.eta) : 0.0)
                                   : (a ? 1.0 : -instance.gamma);
              const int da = cut.deviation[i];
              const double dev = x ? (da ? (1.0 - instance.eta) : 0.0)
                                   : (da ? 1.0 : -instance.gamma);
              term = pa * (own - dev);
            }
            cut_term[(c * n + i) * 4 + cell_of(x, a)] = term;
          }
        }
        const double* t = &cut_term[(c * n + i) * 4];
        cut_max4[c * n + i] = std::max({t[0], t[1], t[2], t[3]});
      }
    }

    plain.cell = obj_cell;
    plain.constant = 0.0;
    build_tables(plain);

    if (num_cuts > 0) {
      const std::vector<double> lambda = fit_multipliers(warm_value, have_warm);
      double lambda_sum = 0.0;
      for (double l : lambda) lambda_sum += l;
      if (lambda_sum > 0.0) {
        use_lagrangian = true;
        lagrangian.cell.assign(static_cast<std::size_t>(n) * 4, 0.0);
        for (int i = 0; i < n; ++i) {
          for (int cell = 0; cell < 4; ++cell) {
            double value = obj_cell[i * 4 + cell];
            for (std::size_t c = 0; c < num_cuts; ++c) {
              value += lambda[c] * cut_term[(c * n + i) * 4 + cell];
            }
            lagrangian.cell[i * 4 + cell] = value;
          }
        }
        lagrangian.constant = lambda_sum * phi_ub;
        build_tables(lagrangian);
      }
    }

    xcur.assign(n, 0);
    acur.assign(n, 0);
    cut_opt.assign(num_cuts, 0.0);
    cut_contrib.assign(num_cuts * n, 0.0);
    for (std::size_t c = 0; c < num_cuts; ++c) {
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        cut_contrib[c * n + i] = cut_max4[c * n + i];
        total += cut_max4[c * n + i];
      }
      cut_opt[c] = total;
    }
    undo_contrib.assign(static_cast<std::size_t>(2 * n) * std::max<std::size_t>(num_cuts, 1),
                        0.0);
    undo_opt = undo_contrib;
  }

  // Subgradient ascent on the Lagrangian dual of the cut system: minimizes
  // the unbudgeted relaxation value over multipliers lambda >= 0. Any
  // iterate is a valid bound, so the best one found is kept.
  std::vector<double> fit_multipliers(double warm_value, bool have_warm) const {
    std::vector<double> lambda(num_cuts, 0.0);
    std::vector<double> best_lambda(num_cuts, 0.0);
    double best_bound = kInf;
    std::vector<double> slack(num_cuts);

    for (int round = 0; round < kSubgradientRounds; ++round) {
      // relaxation value and cut slacks under the per-node argmax cells
      double bound = 0.0;
      std::fill(slack.begin(), slack.end(), phi_ub);
      for (int i = 0; i < n; ++i) {
        int best_cell = 0;
        double best_merged = -kInf;
        for (int cell = 0; cell < 4; ++cell) {
          double merged = obj_cell[i * 4 + cell];
          for (std::size_t c = 0; c < num_cuts; ++c) {
            merged += lambda[c] * cut_term[(c * n + i) * 4 + cell];
          }
          if (merged > best_merged) {
            best_merged = merged;
            best_cell = cell;
          }
        }
        bound += best_merged;
        for (std::size_t c = 0; c < num_cuts; ++c) {
          slack[c] += cut_term[(c * n + i) * 4 + best_cell];
        }
      }
      for (std::size_t c = 0; c < num_cuts; ++c) bound += lambda[c] * phi_ub;

      if (bound < best_bound) {
        best_bound = bound;
        best_lambda = lambda;
      }

      double violation_norm = 0.0;
      for (std::size_t c = 0; c < num_cuts; ++c) {
        if (slack[c] < 0.0) violation_norm += slack[c] * slack[c];
      }
      if (violation_norm == 0.0) break;  // relaxed argmax already honors the cuts

      // Polyak-style step toward the best known feasible value, falling back
      // to a diminishing step when no incumbent exists yet.
      const double target = have_warm ? warm_value : bound - std::abs(bound) * 0.1 - 1.0;
      double step = (bound - target) / violation_norm;
      if (!(step > 0.0) || !std::isfinite(step)) step = 1.0 / (round + 1.0);
      step *= 1.5 / (1.0 + 0.05 * round);
      for (std::size_t c = 0; c < num_cuts; ++c) {
        if (slack[c] < 0.0) lambda[c] = std::max(0.0, lambda[c] - step * slack[c]);
      }
    }
    return best_lambda;
  }

  void build_tables(BoundTables& tables) const {
    tables.suffix_base.assign(n + 1, 0.0);
    tables.suffix_maxcell.assign(n + 1, 0.0);
    for (int k = n - 1; k >= 0; --k) {
      const int i = perm[k];
      const double* cell = &tables.cell[i * 4];
      tables.suffix_base[k] = tables.suffix_base[k + 1] + cell[0];
      tables.suffix_maxcell[k] =
          tables.suffix_maxcell[k + 1] + std::max({cell[0], cell[1], cell[2], cell[3]});
    }

    // Per-node linear majorant: cell(x,a) <= cell(0,0) + gd*x + ga*a with
    // gd, ga >= 0. The gains feed the two budgeted fractional relaxations.
    tables.frac_def.resize(n + 1);
    tables.frac_atk.resize(n + 1);
    std::vector<double> gain_d(n), gain_a(n);
    for (int i = 0; i < n; ++i) {
      const double* cell = &tables.cell[i * 4];
      const double ga = std::max(0.0, cell[cell_of(0, 1)] - cell[0]);
      const double gd = std::max({0.0, cell[cell_of(1, 0)] - cell[0],
                                  cell[cell_of(1, 1)] - cell[0] - ga});
      gain_a[i] = ga;
      gain_d[i] = gd;
    }
    for (int k = 0; k <= n; ++k) {
      build_frac(tables.frac_def[k], k, gain_d, instance.defender_weights);
      build_frac(tables.frac_atk[k], k, gain_a, instance.attacker_weights);
    }
  }

  void build_frac(FracTable& table, int k, const std::vector<double>& gains,
                  const std::vector<double>& weights) const {
    struct Entry {
      double gain, weight;
      int pos;
    };
    std::vector<Entry> entries;
    for (int j = k; j < n; ++j) {
      const int i = perm[j];
      if (gains[i] > 0.0) entries.push_back({gains[i], weights[i], j});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
      const double lr = l.gain / l.weight;
      const double rr = r.gain / r.weight;
      if (lr != rr) return lr > rr;
      return l.pos < r.pos;
    });
    table.prefix_gain.assign(entries.size() + 1, 0.0);
    table.prefix_weight.assign(entries.size() + 1, 0.0);
    table.gains.resize(entries.size());
    table.weights.resize(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) {
      table.prefix_gain[j + 1] = table.prefix_gain[j] + entries[j].gain;
      table.prefix_weight[j + 1] = table.prefix_weight[j] + entries[j].weight;
      table.gains[j] = entries[j].gain;
      table.weights[j] = entries[j].weight;
    }
  }

  bool out_of_budget() {
    if (limits.node_limit > 0 && nodes >= limits.node_limit) return true;
    if (limits.time_limit_s > 0.0 && (nodes & 0xFFF) == 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed >= limits.time_limit_s) return true;
    }
    return false;
  }

  // Upper bound from one relaxation table. depth counts assigned variables;
  // even depth means node perm[depth/2] is untouched, odd means only its x is
  // set. Half-decided nodes contribute their best reachable cell, unbudgeted.
  double table_bound(const BoundTables& tables, double decided, int depth) const {
    const int k = depth / 2;
    double fixed = decided + tables.constant;
    int suffix_from = k;
    if (depth & 1) {
      const int i = perm[k];
      const double* cell = &tables.cell[i * 4];
      const int x = xcur[i];
      fixed += std::max(cell[cell_of(x, 0)], cell[cell_of(x, 1)]);
      suffix_from = k + 1;
    }
    const double quick = fixed + tables.suffix_maxcell[suffix_from];
    if (quick <= best_value + kBoundTol) return quick;
    const double tight =
        fixed + tables.suffix_base[suffix_from] +
        tables.frac_def[suffix_from].bound(instance.defender_budget - d_used) +
        tables.frac_atk[suffix_from].bound(instance.attacker_budget - a_used);
    return std::min(quick, tight);
  }

  bool bound_prunes(int depth) const {
    if (table_bound(plain, decided_obj, depth) <= best_value + kBoundTol) return true;
    return use_lagrangian &&
           table_bound(lagrangian, decided_lag, depth) <= best_value + kBoundTol;
  }

  bool cuts_violated() const {
    for (double opt : cut_opt) {
      if (opt + phi_ub < -kCutTol) return true;
    }
    return false;
  }

  // Re-verify boundary-tight cuts with full payoff evaluations: the
  // incremental slacks carry path rounding of order 1e-12.
  bool leaf_cuts_ok() const {
    for (std::size_t c = 0; c < num_cuts; ++c) {
      if (cut_opt[c] + phi_ub < kGrayZone) {
        const Cut& cut = cuts[c];
        double own, dev;
        if (cut.owner == PlayerRole::Defender) {
          own = defender_payoff(instance, xcur, acur);
          dev = defender_payoff(instance, cut.deviation, acur);
        } else {
          own = attacker_payoff(instance, xcur, acur);
          dev = attacker_payoff(instance, xcur, cut.deviation);
        }
        if (dev > own + phi_ub + kCutTol) return false;
      }
    }
    return true;
  }

  double leaf_value() const {
    switch (objective) {
      case MasterObjective::DefenderPayoff:
        return defender_payoff(instance, xcur, acur);
      case MasterObjective::AttackerPayoff:
        return attacker_payoff(instance, xcur, acur);
      case MasterObjective::SocialWelfare:
        return defender_payoff(instance, xcur, acur) + attacker_payoff(instance, xcur, acur);
    }
    return 0.0;
  }

  void handle_leaf() {
    if (!leaf_cuts_ok()) return;
    const double value = leaf_value();
    if (value > best_value) {
      best_value = value;
      best_profile.defense = xcur;
      best_profile.attack = acur;
      found = true;
    }
  }

  void apply_assignment(int depth, int i, bool assign_x, int value) {
    double* save_contrib = &undo_contrib[depth * std::max<std::size_t>(num_cuts, 1)];
    double* save_opt = &undo_opt[depth * std::max<std::size_t>(num_cuts, 1)];
    for (std::size_t c = 0; c < num_cuts; ++c) {
      const double* t = &cut_term[(c * n + i) * 4];
      const double contrib = assign_x
          ? std::max(t[cell_of(value, 0)], t[cell_of(value, 1)])
          : t[cell_of(xcur[i], value)];
      save_contrib[c] = cut_contrib[c * n + i];
      save_opt[c] = cut_opt[c];
      cut_opt[c] += contrib - cut_contrib[c * n + i];
      cut_contrib[c * n + i] = contrib;
    }
  }

  void undo_assignment(int depth, int i) {
    const double* save_contrib = &undo_contrib[depth * std::max<std::size_t>(num_cuts, 1)];
    const double* save_opt = &undo_opt[depth * std::max<std::size_t>(num_cuts, 1)];
    for (std::size_t c = 0; c < num_cuts; ++c) {
      cut_contrib[c * n + i] = save_contrib[c];
      cut_opt[c] = save_opt[c];
    }
  }

  // Fixed, deterministic branch-value order: the value whose best reachable
  // cell scores higher goes first, ties resolved toward 0. Finding strong
  // incumbents early is what lets the bounds close the rest of the tree.
  void value_order(int i, bool assign_x, int order[2]) const {
    const double* cell = use_lagrangian ? &lagrangian.cell[i * 4] : &obj_cell[i * 4];
    double score0, score1;
    if (assign_x) {
      score0 = std::max(cell[cell_of(0, 0)], cell[cell_of(0, 1)]);
      score1 = std::max(cell[cell_of(1, 0)], cell[cell_of(1, 1)]);
    } else {
      const int x = xcur[i];
      score0 = cell[cell_of(x, 0)];
      score1 = cell[cell_of(x, 1)];
    }
    if (score1 > score0) {
      order[0] = 1;
      order[1] = 0;
    } else {
      order[0] = 0;
      order[1] = 1;
    }
  }

  void dfs(int depth) {
    ++nodes;
    if (out_of_budget()) {
      limit_hit = true;
      return;
    }
    if (depth == 2 * n) {
      handle_leaf();
      return;
    }
    if (bound_prunes(depth)) return;

    const int k = depth / 2;
    const int i = perm[k];
    const bool assign_x = (depth & 1) == 0;
    const double saved_d = d_used;
    const double saved_a = a_used;
    const double saved_obj = decided_obj;
    const double saved_lag = decided_lag;

    int order[2];
    value_order(i, assign_x, order);
    for (int pick = 0; pick < 2; ++pick) {
      const int value = order[pick];
      if (assign_x) {
        if (value == 1) {
          if (d_used + instance.defender_weights[i] >
              instance.defender_budget + kFeasibilityTol) {
            continue;
          }
          d_used += instance.defender_weights[i];
        }
        xcur[i] = static_cast<std::uint8_t>(value);
      } else {
        if (value == 1) {
          if (a_used + instance.attacker_weights[i] >
              instance.attacker_budget + kFeasibilityTol) {
            continue;
          }
          a_used += instance.attacker_weights[i];
        }
        acur[i] = static_cast<std::uint8_t>(value);
        decided_obj += obj_cell[i * 4 + cell_of(xcur[i], value)];
        if (use_lagrangian) decided_lag += lagrangian.cell[i * 4 + cell_of(xcur[i], value)];
      }
      apply_assignment(depth, i, assign_x, value);

      if (!cuts_violated()) dfs(depth + 1);

      undo_assignment(depth, i);
      d_used = saved_d;
      a_used = saved_a;
      decided_obj = saved_obj;
      decided_lag = saved_lag;
      if (assign_x) {
        xcur[i] = 0;
      } else {
        acur[i] = 0;
      }
      if (limit_hit) return;
    }
  }
};

bool warm_start_feasible(const CngInstance& instance, const std::vector<Cut>& cuts,
                         double phi_ub, const StrategyProfile& profile) {
  if (profile.defense.size() != static_cast<std::size_t>(instance.n) ||
      profile.attack.size() != static_cast<std::size_t>(instance.n)) {
    return false;
  }
  if (!is_feasible(instance, profile)) return false;
  for (const Cut& cut : cuts) {
    double own, dev;
    if (cut.owner == PlayerRole::Defender) {
      own = defender_payoff(instance, profile.defense, profile.attack);
      dev = defender_payoff(instance, cut.deviation, profile.attack);
    } else {
      own = attacker_payoff(instance, profile.defense, profile.attack);
      dev = attacker_payoff(instance, profile.defense, cut.deviation);
    }
    if (dev > own + phi_ub + kCutTol) return false;
  }
  return true;
}

}  // namespace

MasterResult solve_master(const CngInstance& instance,
                          const CutPool& pool,
                          MasterObjective objective,
                          double phi_ub,
                          const MasterLimits& limits,
                          const StrategyProfile* warm_start) {
  validate(instance);
  if (phi_ub < 0.0) {
    throw CngError(ErrorCode::InvalidArgument, "phi_ub must be nonnegative");
  }
  for (const Cut& cut : pool.cuts()) {
    if (cut.deviation.size() != static_cast<std::size_t>(instance.n)) {
      throw CngError(ErrorCode::ShapeMismatch, "cut deviation must have length n");
    }
  }

  Searcher searcher(instance, pool.cuts(), objective, phi_ub);
  searcher.limits = limits;
  searcher.start = Clock::now();

  bool have_warm = false;
  if (warm_start != nullptr &&
      warm_start_feasible(instance, pool.cuts(), phi_ub, *warm_start)) {
    searcher.best_value = evaluate_objective(instance, objective, *warm_start);
    searcher.best_profile = *warm_start;
    searcher.found = true;
    have_warm = true;
  }
  searcher.prepare(searcher.best_value, have_warm);

  searcher.dfs(0);

  MasterResult result;
  result.nodes_explored = searcher.nodes;
  if (searcher.limit_hit) {
    result.status = MasterStatus::Limit;
    result.has_incumbent = searcher.found;
    if (searcher.found) {
      result.profile = std::move(searcher.best_profile);
      result.value = searcher.best_value;
    }
    return result;
  }
  if (!searcher.found) {
    result.status = MasterStatus::Infeasible;
    return result;
  }
  result.status = MasterStatus::Optimal;
  result.has_incumbent = true;
  result.profile = std::move(searcher.best_profile);
  result.value = searcher.best_value;
  return result;
}

}  // namespace cng
