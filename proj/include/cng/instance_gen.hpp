#ifndef CNG_INSTANCE_GEN_HPP
#define CNG_INSTANCE_GEN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cng/model.hpp"

namespace cng {

/// Recipe for one synthetic instance. In paper-grid mode the parameters must
/// come from the benchmark sets (gamma in {0, 0.1}, eta in {0.6, 0.8},
/// defender fraction in {0.30, 0.75}, attacker fraction in {0.03, 0.10,
/// 0.30}); custom mode accepts anything that yields a valid instance.
struct GenSpec {
  int n = 10;
  double gamma = 0.0;
  double eta = 0.6;
  double defender_budget_frac = 0.30;
  double attacker_budget_frac = 0.10;
  std::uint64_t seed = 0;
  bool paper_grid = true;
};

/// Synthetic instance:
///   - weights a, d: integer vectors uniform on [1,25]
///   - profits p^a = b + r_a, p^d = b + r_d for a shared base b and fresh
///     r_a, r_d, all integer vectors uniform on [1,25]
///   - epsilon = 1.25 eta, delta = 0.80 eta
///   - D = defender_budget_frac * sum(d), A = attacker_budget_frac * sum(a)
///
/// Deterministic given (spec, seed): mt19937_64 seeded with spec.seed, draws
/// in the fixed order a, d, b, r_a, r_d, each entry 1 + (next() % 25). The
/// modulo reduction is part of the contract so files reproduce across
/// platforms.
CngInstance generate(const GenSpec& spec);

/// The 24 paper-grid combinations for one size, in (gamma, eta, defender
/// fraction, attacker fraction) nesting order. Instance k gets seed
/// base_seed + seed_stride + k, so multi-size batches stay disjoint.
std::vector<GenSpec> paper_grid(int n, std::uint64_t base_seed, std::uint64_t seed_stride = 0);

struct SnapshotNode {
  std::string name;
  std::string role;
};

/// One traffic snapshot of a live network: named nodes with roles, and an
/// undirected multigraph of traffic counts (collapsed by summation).
struct TrafficSnapshot {
  std::vector<SnapshotNode> nodes;
  std::vector<Edge> edges;  // node indices into `nodes`
};

struct RoleMultiplier {
  double profit = 1.0;
  double weight = 1.0;
};

/// Role name -> multiplier; the "*" entry, when present, catches any role
/// without an exact match. A role with neither match raises UNKNOWN_ROLE.
using RoleTable = std::map<std::string, RoleMultiplier>;

struct IngestParams {
  double eta = 0.6;
  double gamma = 0.0;
  double defender_budget_frac = 0.30;
  double attacker_budget_frac = 0.10;
  RoleTable defender_roles = default_defender_roles();
  RoleTable attacker_roles = default_attacker_roles();

  static RoleTable default_defender_roles();
  static RoleTable default_attacker_roles();
};

/// Derives an instance from a snapshot: profits are the total traffic
/// incident to each node (floored at 1 for isolated nodes), base weights are
/// log2(max(traffic, 2)), then the per-role multipliers scale the defender's
/// (p^d, d) and the attacker's (p^a, a) independently. Factors and budget
/// fractions follow the synthetic recipe. Edges are kept on the instance as
/// provenance only.
CngInstance ingest(const TrafficSnapshot& snapshot, const IngestParams& params = {});

}  // namespace cng

#endif  // CNG_INSTANCE_GEN_HPP
