#ifndef CNG_BEST_RESPONSE_HPP
#define CNG_BEST_RESPONSE_HPP

#include "cng/model.hpp"

namespace cng {

struct BestResponse {
  BinaryVector strategy;
  double value = 0.0;
};

/// Exact defender best response to a fixed attack.
///
/// Both payoffs are node-separable given the opponent's strategy, so the
/// best response reduces to a knapsack: the gain of protecting node i over
/// leaving it open is p^d_i (eta - delta) when attacked and p^d_i (epsilon - 1)
/// when not, with weight d_i and capacity D. Zero-gain nodes (epsilon = 1,
/// unattacked) are left unprotected, so the reported optimum has the smallest
/// support among ties.
BestResponse defender_best_response(const CngInstance& instance,
                                    std::span<const std::uint8_t> attack);

/// Exact attacker best response to a fixed defense. Gain of attacking node i
/// is p^a_i (1 + gamma) when undefended and p^a_i (1 - eta) when defended,
/// weight a_i, capacity A, on top of the all-idle baseline
/// -gamma * sum of p^a over undefended nodes.
BestResponse attacker_best_response(const CngInstance& instance,
                                    std::span<const std::uint8_t> defense);

}  // namespace cng

#endif  // CNG_BEST_RESPONSE_HPP
