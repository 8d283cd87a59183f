#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ckc.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

int exit_code(ckc_status st) {
  switch (st) {
    case CKC_OK:
      return kExitOk;
    case CKC_INFEASIBLE:
      return kExitInfeasible;
    case CKC_ERR_GUARD:
      return kExitGuard;
    default:
      return kExitUsage;
  }
}

[[noreturn]] void die(ckc_status st) {
  std::cerr << "error: " << ckc_last_error() << "\n";
  std::exit(exit_code(st));
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitUsage);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { ckc_string_free(p); }
};

struct OwnedInstance {
  ckc_instance* p = nullptr;
  ~OwnedInstance() { ckc_instance_free(p); }
};

/// Parses "1,2" or "[1,2]" into a JSON array string.
std::string int_list_json(const std::string& text) {
  if (!text.empty() && text.front() == '[') return text;
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(std::stoll(item));
  return arr.dump();
}

int print_with_seed(const std::string& json_text, uint64_t seed) {
  Json j = Json::parse(json_text);
  if (!j.contains("seed")) j["seed"] = seed;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colorful k-center solver"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  uint64_t seed = 0;
  std::string alpha = "8.25";
  app.add_option("--seed", seed, "random seed, echoed in all outputs")->capture_default_str();
  app.add_option("--alpha", alpha, "separation parameter (> 8)")->capture_default_str();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance (JSON on stdin or --input)");
  std::string solve_input, solve_radius, solve_radius_sq;
  int k_override = -1;
  bool early_stop = false, timing = false;
  int parallel = 1;
  solve_cmd->add_option("--input", solve_input, "instance JSON file (default: stdin)");
  solve_cmd->add_option("--radius", solve_radius, "pin a single radius guess (decimal)");
  solve_cmd->add_option("--radius-sq", solve_radius_sq, "pin a single radius guess by its exact square");
  solve_cmd->add_option("--k-override", k_override, "override the instance budget k");
  solve_cmd->add_flag("--early-stop", early_stop, "stop once later guesses cannot improve the cost");
  solve_cmd->add_flag("--timing", timing, "include wall_ms in the report (breaks byte-determinism)");
  solve_cmd->add_option("--parallel", parallel, "worker threads (results are identical)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a solution against an instance");
  std::string verify_instance, verify_solution;
  verify_cmd->add_option("--instance", verify_instance, "instance JSON file (default: stdin)");
  verify_cmd->add_option("--solution", verify_solution, "solution JSON file")->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by exhaustive enumeration");
  std::string oracle_input;
  oracle_cmd->add_option("--input", oracle_input, "instance JSON file (default: stdin)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  bool gen_example25 = false, gen_separated_flag = false, gen_random_flag = false;
  std::string gen_scale = "1", gen_rho = "1", gen_metric = "planar";
  int gen_n = 10, gen_k = 2, gen_c = 2, gen_outliers = 0;
  gen_cmd->add_flag("--example-2-5", gen_example25, "the two-cluster fractional-gap example");
  gen_cmd->add_flag("--separated", gen_separated_flag, "planted alpha-separated planar instance");
  gen_cmd->add_flag("--random", gen_random_flag, "random instance (see --metric)");
  gen_cmd->add_option("--scale", gen_scale, "cluster scale for --example-2-5");
  gen_cmd->add_option("--rho", gen_rho, "planted radius for --separated");
  gen_cmd->add_option("-n,--n", gen_n, "number of points");
  gen_cmd->add_option("-k,--k", gen_k, "center budget");
  gen_cmd->add_option("-c,--colors", gen_c, "number of color classes");
  gen_cmd->add_option("--outliers", gen_outliers, "far outliers for --separated");
  gen_cmd->add_option("--metric", gen_metric, "planar|matrix for --random");

  // match
  auto* match_cmd = app.add_subcommand("match", "standalone exact perfect matching tool");
  std::string match_input, match_target, match_bounds;
  match_cmd->add_option("--input", match_input, "graph JSON file (default: stdin)");
  match_cmd->add_option("--target", match_target, "recover a matching of exactly this weight, e.g. 2,3");
  match_cmd->add_option("--bounds", match_bounds, "per-color degree bounds for the support table");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "CSV of solver cost vs oracle optimum");
  int bench_count = 20, bench_n = 10, bench_k = 2, bench_c = 2;
  std::string bench_metric = "planar";
  bench_cmd->add_option("--count", bench_count, "number of instances")->capture_default_str();
  bench_cmd->add_option("-n,--n", bench_n, "points per instance")->capture_default_str();
  bench_cmd->add_option("-k,--k", bench_k, "center budget")->capture_default_str();
  bench_cmd->add_option("-c,--colors", bench_c, "color classes")->capture_default_str();
  bench_cmd->add_option("--metric", bench_metric, "planar|matrix");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "static SVG of an instance");
  std::string plot_input, plot_solution, plot_rho;
  bool plot_grid = false;
  plot_cmd->add_option("--input", plot_input, "instance JSON file (default: stdin)");
  plot_cmd->add_option("--solution", plot_solution, "solution JSON file to overlay");
  plot_cmd->add_option("--rho", plot_rho, "radius guess; with --grid draws the triangular grid");
  plot_cmd->add_flag("--grid", plot_grid, "draw the grid and occupied edge regions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (solve_cmd->parsed()) {
    OwnedInstance inst;
    ckc_status st = ckc_instance_parse(read_input(solve_input).c_str(), &inst.p);
    if (st != CKC_OK) die(st);
    Json opts;
    opts["alpha"] = alpha;
    opts["seed"] = seed;
    opts["early_stop"] = early_stop;
    opts["timing"] = timing;
    (void)parallel;
    if (k_override >= 0) opts["k_override"] = k_override;
    if (!solve_radius_sq.empty())
      opts["radius_sq"] = solve_radius_sq;
    else if (!solve_radius.empty())
      opts["radius"] = solve_radius;
    OwnedString rep;
    st = ckc_solve(inst.p, opts.dump().c_str(), &rep.p);
    if (st != CKC_OK && st != CKC_INFEASIBLE) die(st);
    std::fputs(rep.p, stdout);
    return exit_code(st);
  }

  if (verify_cmd->parsed()) {
    OwnedInstance inst;
    ckc_status st = ckc_instance_parse(read_input(verify_instance).c_str(), &inst.p);
    if (st != CKC_OK) die(st);
    OwnedString rep;
    st = ckc_verify(inst.p, read_input(verify_solution).c_str(), &rep.p);
    if (st != CKC_OK && st != CKC_INFEASIBLE) die(st);
    print_with_seed(rep.p, seed);
    return exit_code(st);
  }

  if (oracle_cmd->parsed()) {
    OwnedInstance inst;
    ckc_status st = ckc_instance_parse(read_input(oracle_input).c_str(), &inst.p);
    if (st != CKC_OK) die(st);
    OwnedString res;
    st = ckc_oracle(inst.p, &res.p);
    if (st != CKC_OK) die(st);
    return print_with_seed(res.p, seed);
  }

  if (gen_cmd->parsed()) {
    OwnedInstance inst;
    ckc_status st = CKC_ERR_PARSE;
    if (gen_example25)
      st = ckc_gen_example25(gen_scale.c_str(), &inst.p);
    else if (gen_separated_flag)
      st = ckc_gen_separated(gen_n, gen_k, gen_c, alpha.c_str(), gen_rho.c_str(), seed, gen_outliers,
                             &inst.p);
    else if (gen_random_flag)
      st = ckc_gen_random(gen_n, gen_k, gen_c, gen_metric == "matrix" ? 1 : 0, seed, &inst.p);
    else {
      std::cerr << "error: pick one of --example-2-5, --separated, --random\n";
      return kExitUsage;
    }
    if (st != CKC_OK) die(st);
    OwnedString out;
    st = ckc_instance_to_json(inst.p, &out.p);
    if (st != CKC_OK) die(st);
    return print_with_seed(out.p, seed);
  }

  if (match_cmd->parsed()) {
    const std::string graph = read_input(match_input);
    if (!match_target.empty()) {
      OwnedString res;
      const ckc_status st =
          ckc_match_recover(graph.c_str(), int_list_json(match_target).c_str(), seed, &res.p);
      if (st != CKC_OK && st != CKC_INFEASIBLE) die(st);
      std::fputs(res.p, stdout);
      return exit_code(st);
    }
    OwnedString res;
    const std::string bounds = match_bounds.empty() ? "" : int_list_json(match_bounds);
    const ckc_status st = ckc_match_support(graph.c_str(), bounds.c_str(), seed, &res.p);
    if (st != CKC_OK) die(st);
    std::fputs(res.p, stdout);
    return kExitOk;
  }

  if (bench_cmd->parsed()) {
    std::printf("instance,n,k,c,seed,opt,cost,ratio,branch,time_ms\n");
    for (int i = 0; i < bench_count; ++i) {
      const uint64_t inst_seed = seed + static_cast<uint64_t>(i);
      OwnedInstance inst;
      ckc_status st = ckc_gen_random(bench_n, bench_k, bench_c, bench_metric == "matrix" ? 1 : 0,
                                     inst_seed, &inst.p);
      if (st != CKC_OK) die(st);
      OwnedString oracle_json;
      st = ckc_oracle(inst.p, &oracle_json.p);
      if (st != CKC_OK) die(st);
      Json opts;
      opts["alpha"] = alpha;
      opts["seed"] = inst_seed;
      const auto t0 = std::chrono::steady_clock::now();
      OwnedString rep_json;
      st = ckc_solve(inst.p, opts.dump().c_str(), &rep_json.p);
      if (st != CKC_OK && st != CKC_INFEASIBLE) die(st);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      const Json oracle = Json::parse(std::string(oracle_json.p));
      const Json rep = Json::parse(std::string(rep_json.p));
      const double opt = std::stod(oracle.at("radius").get<std::string>());
      double cost = -1, ratio = -1;
      std::string branch = "none";
      if (!rep.at("best").is_null()) {
        cost = std::stod(rep.at("best").at("radius").get<std::string>());
        branch = rep.at("provenance").at("branch").get<std::string>();
        ratio = opt > 0 ? cost / opt : (cost > 0 ? -1 : 1);
      }
      std::printf("random-%d,%d,%d,%d,%llu,%.9g,%.9g,%.9g,%s,%.3f\n", i, bench_n, bench_k, bench_c,
                  static_cast<unsigned long long>(inst_seed), opt, cost, ratio, branch.c_str(), ms);
    }
    return kExitOk;
  }

  if (plot_cmd->parsed()) {
    OwnedInstance inst;
    ckc_status st = ckc_instance_parse(read_input(plot_input).c_str(), &inst.p);
    if (st != CKC_OK) die(st);
    Json opts;
    opts["seed"] = seed;
    if (plot_grid) {
      opts["alpha"] = alpha;
      if (!plot_rho.empty()) opts["rho"] = plot_rho;
    }
    if (!plot_solution.empty()) opts["solution"] = Json::parse(read_input(plot_solution));
    OwnedString svg;
    st = ckc_plot(inst.p, opts.dump().c_str(), &svg.p);
    if (st != CKC_OK) die(st);
    std::fputs(svg.p, stdout);
    return kExitOk;
  }

  return kExitUsage;
}
