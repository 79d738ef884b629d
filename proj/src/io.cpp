#include "cng/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cng {

namespace {

using nlohmann::json;

// Fixed 17-significant-digit formatting: enough to round-trip any double, so
// a canonical file re-loaded and re-written is byte-identical.
std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void append_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_number(values[i]);
  }
  out += ']';
}

void append_bits(std::string& out, const BinaryVector& bits) {
  out += '[';
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) out += ", ";
    out += bits[i] ? '1' : '0';
  }
  out += ']';
}

json parse(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw CngError(ErrorCode::IoError, "malformed JSON");
  }
  return parsed;
}

const json& field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw CngError(ErrorCode::IoError, std::string("missing field '") + key + "'");
  }
  return *it;
}

std::vector<double> to_doubles(const json& array, const char* key) {
  if (!array.is_array()) {
    throw CngError(ErrorCode::IoError, std::string("field '") + key + "' must be an array");
  }
  std::vector<double> values;
  values.reserve(array.size());
  for (const json& entry : array) values.push_back(entry.get<double>());
  return values;
}

BinaryVector to_bits(const json& array, const char* key) {
  BinaryVector bits;
  for (double v : to_doubles(array, key)) {
    if (v != 0.0 && v != 1.0) {
      throw CngError(ErrorCode::IoError, std::string("field '") + key + "' must be binary");
    }
    bits.push_back(v != 0.0);
  }
  return bits;
}

}  // namespace

std::string instance_to_json(const CngInstance& instance) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(instance.n) + ",\n";
  out += "  \"p_d\": ";
  append_array(out, instance.defender_profits);
  out += ",\n  \"p_a\": ";
  append_array(out, instance.attacker_profits);
  out += ",\n  \"d\": ";
  append_array(out, instance.defender_weights);
  out += ",\n  \"a\": ";
  append_array(out, instance.attacker_weights);
  out += ",\n  \"D\": " + format_number(instance.defender_budget);
  out += ",\n  \"A\": " + format_number(instance.attacker_budget);
  out += ",\n  \"delta\": " + format_number(instance.delta);
  out += ",\n  \"eta\": " + format_number(instance.eta);
  out += ",\n  \"epsilon\": " + format_number(instance.epsilon);
  out += ",\n  \"gamma\": " + format_number(instance.gamma);
  if (!instance.edges.empty()) {
    out += ",\n  \"edges\": [";
    for (std::size_t i = 0; i < instance.edges.size(); ++i) {
      const Edge& e = instance.edges[i];
      if (i) out += ", ";
      out += '[' + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
             format_number(e.traffic) + ']';
    }
    out += ']';
  }
  out += "\n}\n";
  return out;
}

CngInstance instance_from_json(const std::string& text) {
  const json parsed = parse(text);
  CngInstance instance;
  instance.n = field(parsed, "n").get<int>();
  instance.defender_profits = to_doubles(field(parsed, "p_d"), "p_d");
  instance.attacker_profits = to_doubles(field(parsed, "p_a"), "p_a");
  instance.defender_weights = to_doubles(field(parsed, "d"), "d");
  instance.attacker_weights = to_doubles(field(parsed, "a"), "a");
  instance.defender_budget = field(parsed, "D").get<double>();
  instance.attacker_budget = field(parsed, "A").get<double>();
  instance.delta = field(parsed, "delta").get<double>();
  instance.eta = field(parsed, "eta").get<double>();
  instance.epsilon = field(parsed, "epsilon").get<double>();
  instance.gamma = field(parsed, "gamma").get<double>();
  if (auto it = parsed.find("edges"); it != parsed.end()) {
    for (const json& entry : *it) {
      if (!entry.is_array() || entry.size() != 3) {
        throw CngError(ErrorCode::IoError, "edges must be [u, v, traffic] triples");
      }
      instance.edges.push_back({entry[0].get<int>(), entry[1].get<int>(),
                                entry[2].get<double>()});
    }
  }
  validate(instance);
  return instance;
}

CngInstance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

void save_instance(const CngInstance& instance, const std::string& path) {
  write_file(path, instance_to_json(instance));
}

std::string result_to_json(const EquilibriumResult& result) {
  std::string out = "{\n";
  out += "  \"x\": ";
  append_bits(out, result.profile.defense);
  out += ",\n  \"alpha\": ";
  append_bits(out, result.profile.attack);
  out += ",\n  \"phi\": " + format_number(result.phi);
  out += ",\n  \"exact\": " + std::string(result.exact ? "true" : "false");
  out += ",\n  \"defender_payoff\": " + format_number(result.defender_value);
  out += ",\n  \"attacker_payoff\": " + format_number(result.attacker_value);
  out += ",\n  \"objective\": \"" + std::string(to_string(result.objective)) + "\"";
  out += ",\n  \"objective_value\": " + format_number(result.objective_value);
  out += ",\n  \"iterations\": " + std::to_string(result.iterations);
  out += ",\n  \"cuts\": " + std::to_string(result.cuts_added);
  out += ",\n  \"phi_ub\": " + format_number(result.phi_ub_final);
  out += ",\n  \"wall_time_s\": " + format_number(result.wall_time_s);
  out += ",\n  \"status\": \"" + std::string(to_string(result.status)) + "\"";
  out += "\n}\n";
  return out;
}

EquilibriumResult result_from_json(const std::string& text) {
  const json parsed = parse(text);
  EquilibriumResult result;
  result.profile.defense = to_bits(field(parsed, "x"), "x");
  result.profile.attack = to_bits(field(parsed, "alpha"), "alpha");
  result.phi = field(parsed, "phi").get<double>();
  result.exact = field(parsed, "exact").get<bool>();
  result.defender_value = field(parsed, "defender_payoff").get<double>();
  result.attacker_value = field(parsed, "attacker_payoff").get<double>();
  const std::string objective = field(parsed, "objective").get<std::string>();
  if (objective == "defender") {
    result.objective = MasterObjective::DefenderPayoff;
  } else if (objective == "attacker") {
    result.objective = MasterObjective::AttackerPayoff;
  } else if (objective == "social") {
    result.objective = MasterObjective::SocialWelfare;
  } else {
    throw CngError(ErrorCode::IoError, "unknown objective '" + objective + "'");
  }
  result.objective_value = field(parsed, "objective_value").get<double>();
  result.iterations = field(parsed, "iterations").get<int>();
  result.cuts_added = field(parsed, "cuts").get<int>();
  result.phi_ub_final = field(parsed, "phi_ub").get<double>();
  result.wall_time_s = field(parsed, "wall_time_s").get<double>();
  const std::string status = field(parsed, "status").get<std::string>();
  if (status == "PROVED_OPTIMAL_NE") {
    result.status = SolveStatus::ProvedOptimalNe;
  } else if (status == "INCUMBENT_ON_LIMIT") {
    result.status = SolveStatus::IncumbentOnLimit;
  } else {
    throw CngError(ErrorCode::IoError, "unknown status '" + status + "'");
  }
  return result;
}

EquilibriumResult load_result(const std::string& path) {
  return result_from_json(read_file(path));
}

void save_result(const EquilibriumResult& result, const std::string& path) {
  write_file(path, result_to_json(result));
}

TrafficSnapshot snapshot_from_json(const std::string& text) {
  const json parsed = parse(text);
  TrafficSnapshot snapshot;
  for (const json& node : field(parsed, "nodes")) {
    snapshot.nodes.push_back({field(node, "name").get<std::string>(),
                              field(node, "role").get<std::string>()});
  }
  if (auto it = parsed.find("edges"); it != parsed.end()) {
    for (const json& entry : *it) {
      if (!entry.is_array() || entry.size() != 3) {
        throw CngError(ErrorCode::IoError, "edges must be [u, v, traffic] triples");
      }
      snapshot.edges.push_back({entry[0].get<int>(), entry[1].get<int>(),
                                entry[2].get<double>()});
    }
  }
  return snapshot;
}

TrafficSnapshot load_snapshot(const std::string& path) {
  return snapshot_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CngError(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CngError(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace cng
