#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "cng/best_response.hpp"
#include "cng/instance_gen.hpp"
#include "cng/io.hpp"
#include "cng/metrics.hpp"
#include "cng/oracle.hpp"
#include "cng/zero_regrets.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace cng;

namespace {

constexpr double kSyntheticTimeLimit = 100.0;
constexpr double kIngestedTimeLimit = 180.0;

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_short(double value) {
  if (std::isinf(value)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

MasterObjective parse_objective(const std::string& name) {
  if (name == "defender") return MasterObjective::DefenderPayoff;
  if (name == "attacker") return MasterObjective::AttackerPayoff;
  if (name == "social") return MasterObjective::SocialWelfare;
  throw CngError(ErrorCode::InvalidArgument,
                 "objective must be defender, attacker or social");
}

// Default per the experiment setups: 100 s for synthetic instances, 180 s for
// ingested ones (recognized by their provenance edges).
double default_time_limit(const CngInstance& instance) {
  return instance.edges.empty() ? kSyntheticTimeLimit : kIngestedTimeLimit;
}

struct SolveFlags {
  std::string objective = "defender";
  double time_limit = 0.0;  // 0: pick by instance kind
  double phi_increment = 1.0;
  double phi_start = 0.0;
  double ne_tolerance = kNeToleranceDefault;
  int max_iterations = 1000000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--objective", objective,
                    "selection objective: defender, attacker or social");
    cmd->add_option("--time-limit", time_limit, "wall-clock limit in seconds");
    cmd->add_option("--phi-increment", phi_increment,
                    "slack step applied when the master proves infeasibility");
    cmd->add_option("--phi-start", phi_start, "initial slack bound");
    cmd->add_option("--ne-tolerance", ne_tolerance,
                    "gap below which an equilibrium counts as exact");
    cmd->add_option("--max-iterations", max_iterations, "master solve cap");
  }

  SolveConfig config(const CngInstance& instance) const {
    SolveConfig config;
    config.objective = parse_objective(objective);
    config.time_limit_s = time_limit > 0.0 ? time_limit : default_time_limit(instance);
    config.phi_increment = phi_increment;
    config.phi_start = phi_start;
    config.ne_tolerance = ne_tolerance;
    config.max_iterations = max_iterations;
    return config;
  }
};

std::string grid_file_name(const GenSpec& spec) {
  std::ostringstream name;
  name << "cng_n" << spec.n << "_g" << format_short(spec.gamma) << "_e"
       << format_short(spec.eta) << "_D" << format_short(spec.defender_budget_frac)
       << "_A" << format_short(spec.attacker_budget_frac) << "_s" << spec.seed
       << ".json";
  return name.str();
}

int cmd_generate(const std::vector<int>& sizes, bool grid, GenSpec base,
                 const std::string& output) {
  if (sizes.empty()) {
    throw CngError(ErrorCode::InvalidArgument, "at least one size is required");
  }
  if (!grid) {
    if (sizes.size() != 1) {
      throw CngError(ErrorCode::InvalidArgument,
                     "one size per file; use --grid for batches");
    }
    base.n = sizes[0];
    save_instance(generate(base), output);
    std::cout << output << "\n";
    return 0;
  }

  fs::create_directories(output);
  int written = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    for (GenSpec spec : paper_grid(sizes[k], base.seed, k * 24)) {
      const fs::path path = fs::path(output) / grid_file_name(spec);
      save_instance(generate(spec), path.string());
      ++written;
    }
  }
  std::cout << written << " instances written to " << output << "\n";
  return 0;
}

int cmd_solve(const std::string& instance_path, const SolveFlags& flags,
              const std::string& output) {
  const CngInstance instance = load_instance(instance_path);
  const EquilibriumResult result = solve(instance, flags.config(instance));
  const std::string text = result_to_json(result);
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
  return result.status == SolveStatus::ProvedOptimalNe ? 0 : 2;
}

std::string price_to_json(const char* key, const PriceReport& report) {
  std::string out = "{\n";
  out += "  \"" + std::string(key) + "\": " +
         (std::isfinite(report.price) ? format_double(report.price) : "\"inf\"");
  out += ",\n  \"" + std::string(key) + "_rounded\": " +
         (std::isfinite(report.price)
              ? format_short(std::round(report.price * 100.0) / 100.0)
              : "\"inf\"");
  out += ",\n  \"best_outcome_value\": " + format_double(report.best_outcome_value);
  out += ",\n  \"phi\": " + format_double(report.best_ne.phi);
  out += ",\n  \"phi_ub\": " + format_double(report.best_ne.phi_ub_final);
  out += ",\n  \"ne\": " + result_to_json(report.best_ne);
  out += "}\n";
  return out;
}

int cmd_price(const std::string& instance_path, const SolveFlags& flags, bool security,
              const std::string& output) {
  const CngInstance instance = load_instance(instance_path);
  const SolveConfig config = flags.config(instance);
  const PriceReport report =
      security ? price_of_security(instance, config) : price_of_aggression(instance, config);
  const std::string text = price_to_json(security ? "pos" : "poa", report);
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
  return report.best_ne.status == SolveStatus::ProvedOptimalNe ? 0 : 2;
}

int cmd_ingest(const std::string& snapshot_path, IngestParams params,
               const std::string& roles_path, const std::string& output) {
  if (!roles_path.empty()) {
    const nlohmann::json parsed = nlohmann::json::parse(read_file(roles_path));
    const auto read_table = [&](const char* key, RoleTable& table) {
      if (!parsed.contains(key)) return;
      table.clear();
      for (const auto& [role, mult] : parsed.at(key).items()) {
        table[role] = {mult.at(0).get<double>(), mult.at(1).get<double>()};
      }
    };
    read_table("defender", params.defender_roles);
    read_table("attacker", params.attacker_roles);
  }
  const CngInstance instance = ingest(load_snapshot(snapshot_path), params);
  save_instance(instance, output);
  std::cout << output << "\n";
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& result_path, int cap) {
  const CngInstance instance = load_instance(instance_path);
  const EquilibriumResult result = load_result(result_path);
  oracle::Options options;
  options.enumerate_cap = cap;
  options.equilibria_cap = cap;

  std::vector<std::string> failures;
  if (!is_feasible(instance, result.profile)) {
    failures.push_back("profile violates a budget constraint");
  }
  const double fd = defender_payoff(instance, result.profile);
  const double fa = attacker_payoff(instance, result.profile);
  if (std::abs(fd - result.defender_value) > 1e-9) {
    failures.push_back("defender_payoff mismatch: recomputed " + format_double(fd));
  }
  if (std::abs(fa - result.attacker_value) > 1e-9) {
    failures.push_back("attacker_payoff mismatch: recomputed " + format_double(fa));
  }
  const double phi = oracle::min_phi(instance, result.profile, options);
  if (std::abs(phi - result.phi) > 1e-9) {
    failures.push_back("phi mismatch: oracle min_phi is " + format_double(phi));
  }
  if (result.exact && phi > 1e-6) {
    failures.push_back("claimed exact but min_phi is " + format_double(phi));
  }
  if (result.status == SolveStatus::ProvedOptimalNe &&
      result.phi > result.phi_ub_final + 1e-6 + 1e-9) {
    failures.push_back("certified gap exceeds the proved slack bound");
  }
  if (result.status == SolveStatus::ProvedOptimalNe && result.exact &&
      instance.n <= options.equilibria_cap) {
    const oracle::BestNe best = oracle::best_equilibrium(instance, result.objective, options);
    if (!best.exists) {
      failures.push_back("solver claims an exact equilibrium, oracle finds none");
    } else if (result.objective_value < best.value - 1e-9) {
      failures.push_back("a better equilibrium exists: objective " +
                         format_double(best.value));
    }
  }

  if (failures.empty()) {
    std::cout << "verify: OK (phi = " << format_double(phi) << ")\n";
    return 0;
  }
  for (const std::string& failure : failures) {
    std::cerr << "verify: " << failure << "\n";
  }
  return 1;
}

struct ReportRow {
  std::string name;
  int n = 0;
  double pos = 0.0, poa = 0.0, phi = 0.0, fd = 0.0, fa = 0.0, time_s = 0.0;
  bool proved = true;
};

int cmd_report(const std::string& dir, const SolveFlags& flags, int jobs,
               const std::string& output) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw CngError(ErrorCode::InvalidArgument, "no .json instances in " + dir);
  }

  std::vector<ReportRow> rows(files.size());
  std::vector<std::string> errors(files.size());
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < static_cast<long long>(files.size()); ++k) {
    try {
      const CngInstance instance = load_instance(files[k].string());
      const SolveConfig config = flags.config(instance);
      const PriceReport pos = price_of_security(instance, config);
      const PriceReport poa = price_of_aggression(instance, config);
      ReportRow row;
      row.name = files[k].filename().string();
      row.n = instance.n;
      row.pos = pos.price;
      row.poa = poa.price;
      row.phi = 0.5 * (pos.best_ne.phi + poa.best_ne.phi);
      row.fd = pos.best_ne.defender_value;
      row.fa = poa.best_ne.attacker_value;
      row.time_s = pos.best_ne.wall_time_s + poa.best_ne.wall_time_s;
      row.proved = pos.best_ne.status == SolveStatus::ProvedOptimalNe &&
                   poa.best_ne.status == SolveStatus::ProvedOptimalNe;
      rows[k] = row;
    } catch (const std::exception& error) {
      errors[k] = error.what();
    }
  }
  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (!errors[k].empty()) {
      throw CngError(ErrorCode::IoError,
                     files[k].filename().string() + ": " + errors[k]);
    }
  }

  std::ostringstream csv;
  csv << "row,n,pos,pos_min,pos_max,poa,poa_min,poa_max,phi,f_d,f_a,time_s,status\n";
  for (const ReportRow& row : rows) {
    csv << row.name << ',' << row.n << ',' << format_short(row.pos) << ','
        << format_short(row.pos) << ',' << format_short(row.pos) << ','
        << format_short(row.poa) << ',' << format_short(row.poa) << ','
        << format_short(row.poa) << ',' << format_short(row.phi) << ','
        << format_short(row.fd) << ',' << format_short(row.fa) << ','
        << format_short(row.time_s) << ','
        << (row.proved ? "PROVED_OPTIMAL_NE" : "INCUMBENT_ON_LIMIT") << "\n";
  }

  std::map<int, std::vector<const ReportRow*>> by_n;
  for (const ReportRow& row : rows) by_n[row.n].push_back(&row);
  for (const auto& [n, group] : by_n) {
    double pos_sum = 0, pos_min = group[0]->pos, pos_max = group[0]->pos;
    double poa_sum = 0, poa_min = group[0]->poa, poa_max = group[0]->poa;
    double phi_sum = 0, fd_sum = 0, fa_sum = 0, time_sum = 0;
    int proved = 0;
    for (const ReportRow* row : group) {
      pos_sum += row->pos;
      pos_min = std::min(pos_min, row->pos);
      pos_max = std::max(pos_max, row->pos);
      poa_sum += row->poa;
      poa_min = std::min(poa_min, row->poa);
      poa_max = std::max(poa_max, row->poa);
      phi_sum += row->phi;
      fd_sum += row->fd;
      fa_sum += row->fa;
      time_sum += row->time_s;
      proved += row->proved ? 1 : 0;
    }
    const double count = static_cast<double>(group.size());
    csv << "aggregate," << n << ',' << format_short(pos_sum / count) << ','
        << format_short(pos_min) << ',' << format_short(pos_max) << ','
        << format_short(poa_sum / count) << ',' << format_short(poa_min) << ','
        << format_short(poa_max) << ',' << format_short(phi_sum / count) << ','
        << format_short(fd_sum / count) << ',' << format_short(fa_sum / count) << ','
        << format_short(time_sum / count) << ',' << proved << "/"
        << group.size() << "_proved\n";
  }

  if (output.empty()) {
    std::cout << csv.str();
  } else {
    write_file(output, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical node game solver"};
  app.require_subcommand(1);

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "write synthetic instances");
  std::vector<int> sizes;
  bool grid = false;
  bool custom = false;
  GenSpec base;
  std::string gen_out = "instance.json";
  generate_cmd->add_option("--n", sizes, "node counts (comma separated)")
      ->required()
      ->delimiter(',');
  generate_cmd->add_flag("--grid", grid, "emit the full benchmark grid per size");
  generate_cmd->add_flag("--custom", custom, "allow parameters outside the grid sets");
  generate_cmd->add_option("--gamma", base.gamma, "opportunity-cost factor");
  generate_cmd->add_option("--eta", base.eta, "mitigated-attack factor");
  generate_cmd->add_option("--dfrac", base.defender_budget_frac, "defender budget fraction");
  generate_cmd->add_option("--afrac", base.attacker_budget_frac, "attacker budget fraction");
  generate_cmd->add_option("--seed", base.seed, "generator seed");
  generate_cmd->add_option("-o,--output", gen_out, "output file, or directory with --grid");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "compute the objective-best equilibrium");
  std::string solve_instance;
  std::string solve_out;
  SolveFlags solve_flags;
  solve_cmd->add_option("instance", solve_instance, "instance JSON file")->required();
  solve_flags.attach(solve_cmd);
  solve_cmd->add_option("-o,--output", solve_out, "result JSON file (stdout otherwise)");

  // pos / poa
  auto* pos_cmd = app.add_subcommand("pos", "price of security");
  std::string pos_instance, pos_out;
  SolveFlags pos_flags;
  pos_cmd->add_option("instance", pos_instance, "instance JSON file")->required();
  pos_flags.attach(pos_cmd);
  pos_cmd->add_option("-o,--output", pos_out, "report JSON file (stdout otherwise)");

  auto* poa_cmd = app.add_subcommand("poa", "price of aggression");
  std::string poa_instance, poa_out;
  SolveFlags poa_flags;
  poa_cmd->add_option("instance", poa_instance, "instance JSON file")->required();
  poa_flags.attach(poa_cmd);
  poa_cmd->add_option("-o,--output", poa_out, "report JSON file (stdout otherwise)");

  // ingest
  auto* ingest_cmd = app.add_subcommand("ingest", "derive an instance from a traffic snapshot");
  std::string snapshot_path, roles_path, ingest_out = "instance.json";
  IngestParams ingest_params;
  ingest_cmd->add_option("snapshot", snapshot_path, "snapshot JSON file")->required();
  ingest_cmd->add_option("--eta", ingest_params.eta, "mitigated-attack factor");
  ingest_cmd->add_option("--gamma", ingest_params.gamma, "opportunity-cost factor");
  ingest_cmd->add_option("--dfrac", ingest_params.defender_budget_frac,
                         "defender budget fraction");
  ingest_cmd->add_option("--afrac", ingest_params.attacker_budget_frac,
                         "attacker budget fraction");
  ingest_cmd->add_option("--roles", roles_path,
                         "role multiplier JSON: {\"defender\":{role:[profit,weight]},...}");
  ingest_cmd->add_option("-o,--output", ingest_out, "output instance file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "cross-check a result against the oracle");
  std::string verify_instance, verify_result;
  int verify_cap = 14;
  verify_cmd->add_option("--instance", verify_instance, "instance JSON file")->required();
  verify_cmd->add_option("--result", verify_result, "result JSON file")->required();
  verify_cmd->add_option("--cap", verify_cap, "enumeration size cap");

  // report
  auto* report_cmd = app.add_subcommand("report", "solve a batch and emit a CSV table");
  std::string report_dir, report_out;
  int jobs = 0;
  SolveFlags report_flags;
  report_cmd->add_option("dir", report_dir, "directory of instance JSON files")->required();
  report_flags.attach(report_cmd);
  report_cmd->add_option("--jobs", jobs, "parallel workers (default: all cores)");
  report_cmd->add_option("-o,--output", report_out, "CSV file (stdout otherwise)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate_cmd->parsed()) {
      base.paper_grid = !custom;
      return cmd_generate(sizes, grid, base, gen_out);
    }
    if (solve_cmd->parsed()) return cmd_solve(solve_instance, solve_flags, solve_out);
    if (pos_cmd->parsed()) return cmd_price(pos_instance, pos_flags, true, pos_out);
    if (poa_cmd->parsed()) return cmd_price(poa_instance, poa_flags, false, poa_out);
    if (ingest_cmd->parsed()) {
      return cmd_ingest(snapshot_path, ingest_params, roles_path, ingest_out);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_instance, verify_result, verify_cap);
    if (report_cmd->parsed()) return cmd_report(report_dir, report_flags, jobs, report_out);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
