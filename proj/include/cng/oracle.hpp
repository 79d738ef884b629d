#ifndef CNG_ORACLE_HPP
#define CNG_ORACLE_HPP

#include <span>
#include <vector>

#include "cng/master.hpp"
#include "cng/model.hpp"

namespace cng::oracle {

/// Enumeration size caps. Work grows as 2^n per player, so the caps guard
/// against accidental blowups rather than correctness.
struct Options {
  int enumerate_cap = 14;   // max n for feasible-set enumeration and min_phi
  int equilibria_cap = 10;  // max n for all_exact_ne / best_equilibrium
};

/// Deviation gaps at or below this count as exact-equilibrium membership.
inline constexpr double kExactTol = 1e-9;

/// All binary vectors s of length n with weights . s <= capacity +
/// kFeasibilityTol, in lexicographic order (s[0] is the most significant
/// position). Throws SIZE_LIMIT_EXCEEDED when n > cap.
std::vector<BinaryVector> enumerate_feasible(std::span<const double> weights,
                                             double capacity, int n, int cap = 14);

/// Best payoff either player can reach against a fixed opponent strategy, by
/// raw enumeration of the player's feasible set. Deliberately independent of
/// the knapsack-based best responses so the two can cross-check each other.
double best_response_value_defender(const CngInstance& instance,
                                    std::span<const std::uint8_t> attack,
                                    const Options& options = {});
double best_response_value_attacker(const CngInstance& instance,
                                    std::span<const std::uint8_t> defense,
                                    const Options& options = {});

/// Smallest slack that makes the profile an approximate equilibrium:
/// max(0, defender BR value - f^d, attacker BR value - f^a).
double min_phi(const CngInstance& instance, const StrategyProfile& profile,
               const Options& options = {});

/// Every exact equilibrium of the instance, in lexicographic (defense,
/// attack) order. An empty list is a legitimate outcome: these games can
/// have no pure equilibrium at all.
///
/// Three passes over the |X| x |A| profile grid (per-opponent best-response
/// rows, then membership); the grid scans run under OpenMP when available,
/// with output identical to the serial reference.
std::vector<StrategyProfile> all_exact_ne(const CngInstance& instance,
                                          const Options& options = {});

struct BestNe {
  bool exists = false;
  StrategyProfile profile;
  double value = 0.0;
};

/// Exact equilibrium maximizing the objective; first in lexicographic order
/// among payoff ties.
BestNe best_equilibrium(const CngInstance& instance, MasterObjective objective,
                        const Options& options = {});

/// Serial reference implementations, kept as the plain-loop ground truth the
/// parallel kernels are tested against. all_exact_ne checks every profile
/// against every deviation directly, so it costs O(|X| |A| (|X| + |A|))
/// payoff evaluations; keep n small.
namespace reference {

double min_phi(const CngInstance& instance, const StrategyProfile& profile,
               const Options& options = {});
std::vector<StrategyProfile> all_exact_ne(const CngInstance& instance,
                                          const Options& options = {});

}  // namespace reference

}  // namespace cng::oracle

#endif  // CNG_ORACLE_HPP
