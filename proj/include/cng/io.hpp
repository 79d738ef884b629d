#ifndef CNG_IO_HPP
#define CNG_IO_HPP

#include <string>

#include "cng/instance_gen.hpp"
#include "cng/model.hpp"
#include "cng/zero_regrets.hpp"

namespace cng {

/// Canonical instance JSON. Keys are emitted in schema order
/// (n, p_d, p_a, d, a, D, A, delta, eta, epsilon, gamma, edges) and numbers
/// with 17 significant digits, so write(load(write(x))) is byte-identical.
std::string instance_to_json(const CngInstance& instance);
CngInstance instance_from_json(const std::string& text);
CngInstance load_instance(const std::string& path);
void save_instance(const CngInstance& instance, const std::string& path);

/// Solver result JSON:
/// {"x":[...],"alpha":[...],"phi":..,"exact":..,"defender_payoff":..,
///  "attacker_payoff":..,"objective":..,"objective_value":..,"iterations":..,
///  "cuts":..,"phi_ub":..,"wall_time_s":..,"status":..}
std::string result_to_json(const EquilibriumResult& result);
EquilibriumResult result_from_json(const std::string& text);
EquilibriumResult load_result(const std::string& path);
void save_result(const EquilibriumResult& result, const std::string& path);

/// Traffic snapshot JSON: {"nodes":[{"name":..,"role":..}],"edges":[[u,v,traffic]]}.
TrafficSnapshot snapshot_from_json(const std::string& text);
TrafficSnapshot load_snapshot(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cng

#endif  // CNG_IO_HPP
