#include "cng/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace cng {

namespace {

constexpr double kGammaSet[] = {0.0, 0.1};
constexpr double kEtaSet[] = {0.6, 0.8};
constexpr double kDefenderFracSet[] = {0.30, 0.75};
constexpr double kAttackerFracSet[] = {0.03, 0.10, 0.30};

bool in_set(double value, std::span<const double> set) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

std::vector<double> draw_uniform_1_25(std::mt19937_64& rng, int n) {
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) {
    values[i] = 1.0 + static_cast<double>(rng() % 25);
  }
  return values;
}

}  // namespace

CngInstance generate(const GenSpec& spec) {
  if (spec.n < 1) {
    throw CngError(ErrorCode::InvalidArgument, "n must be >= 1");
  }
  if (spec.paper_grid) {
    if (!in_set(spec.gamma, kGammaSet) || !in_set(spec.eta, kEtaSet) ||
        !in_set(spec.defender_budget_frac, kDefenderFracSet) ||
        !in_set(spec.attacker_budget_frac, kAttackerFracSet)) {
      throw CngError(ErrorCode::InvalidArgument,
                     "parameter outside the paper-grid sets; use custom mode");
    }
  }

  std::mt19937_64 rng(spec.seed);
  CngInstance instance;
  instance.n = spec.n;
  instance.attacker_weights = draw_uniform_1_25(rng, spec.n);
  instance.defender_weights = draw_uniform_1_25(rng, spec.n);
  const std::vector<double> base = draw_uniform_1_25(rng, spec.n);
  const std::vector<double> extra_a = draw_uniform_1_25(rng, spec.n);
  const std::vector<double> extra_d = draw_uniform_1_25(rng, spec.n);
  instance.attacker_profits.resize(spec.n);
  instance.defender_profits.resize(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    instance.attacker_profits[i] = base[i] + extra_a[i];
    instance.defender_profits[i] = base[i] + extra_d[i];
  }

  instance.eta = spec.eta;
  instance.epsilon = 1.25 * spec.eta;
  instance.delta = 0.80 * spec.eta;
  instance.gamma = spec.gamma;

  const double sum_d = std::accumulate(instance.defender_weights.begin(),
                                       instance.defender_weights.end(), 0.0);
  const double sum_a = std::accumulate(instance.attacker_weights.begin(),
                                       instance.attacker_weights.end(), 0.0);
  instance.defender_budget = spec.defender_budget_frac * sum_d;
  instance.attacker_budget = spec.attacker_budget_frac * sum_a;

  validate(instance);
  return instance;
}

std::vector<GenSpec> paper_grid(int n, std::uint64_t base_seed, std::uint64_t seed_stride) {
  std::vector<GenSpec> specs;
  std::uint64_t index = 0;
  for (double gamma : kGammaSet) {
    for (double eta : kEtaSet) {
      for (double dfrac : kDefenderFracSet) {
        for (double afrac : kAttackerFracSet) {
          GenSpec spec;
          spec.n = n;
          spec.gamma = gamma;
          spec.eta = eta;
          spec.defender_budget_frac = dfrac;
          spec.attacker_budget_frac = afrac;
          spec.seed = base_seed + seed_stride + index;
          spec.paper_grid = true;
          specs.push_back(spec);
          ++index;
        }
      }
    }
  }
  return specs;
}

RoleTable IngestParams::default_defender_roles() {
  return {{"management", {2.0, 1.5}}, {"*", {1.0, 1.0}}};
}

RoleTable IngestParams::default_attacker_roles() {
  return {{"*", {1.0, 1.0}}};
}

namespace {

RoleMultiplier lookup_role(const RoleTable& table, const std::string& role) {
  if (auto it = table.find(role); it != table.end()) return it->second;
  if (auto it = table.find("*"); it != table.end()) return it->second;
  throw CngError(ErrorCode::UnknownRole, "no multiplier for role '" + role + "'");
}

}  // namespace

CngInstance ingest(const TrafficSnapshot& snapshot, const IngestParams& params) {
  const int n = static_cast<int>(snapshot.nodes.size());
  if (n == 0) {
    throw CngError(ErrorCode::EmptySnapshot, "snapshot has no nodes");
  }

  std::vector<double> traffic(n, 0.0);
  for (const Edge& edge : snapshot.edges) {
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw CngError(ErrorCode::IndexOutOfRange, "edge endpoint outside node list");
    }
    if (edge.traffic < 0.0) {
      throw CngError(ErrorCode::InvalidArgument, "traffic must be nonnegative");
    }
    traffic[edge.u] += edge.traffic;
    if (edge.v != edge.u) traffic[edge.v] += edge.traffic;
  }

  CngInstance instance;
  instance.n = n;
  instance.defender_profits.resize(n);
  instance.attacker_profits.resize(n);
  instance.defender_weights.resize(n);
  instance.attacker_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double profit = traffic[i] > 0.0 ? traffic[i] : 1.0;  // floor for idle nodes
    const double weight = std::log2(std::max(profit, 2.0));
    const RoleMultiplier def = lookup_role(params.defender_roles, snapshot.nodes[i].role);
    const RoleMultiplier atk = lookup_role(params.attacker_roles, snapshot.nodes[i].role);
    instance.defender_profits[i] = profit * def.profit;
    instance.defender_weights[i] = weight * def.weight;
    instance.attacker_profits[i] = profit * atk.profit;
    instance.attacker_weights[i] = weight * atk.weight;
  }

  instance.eta = params.eta;
  instance.epsilon = 1.25 * params.eta;
  instance.delta = 0.80 * params.eta;
  instance.gamma = params.gamma;
  const double sum_d = std::accumulate(instance.defender_weights.begin(),
                                       instance.defender_weights.end(), 0.0);
  const double sum_a = std::accumulate(instance.attacker_weights.begin(),
                                       instance.attacker_weights.end(), 0.0);
  instance.defender_budget = params.defender_budget_frac * sum_d;
  instance.attacker_budget = params.attacker_budget_frac * sum_a;
  instance.edges = snapshot.edges;

  validate(instance);
  return instance;
}

}  // namespace cng
