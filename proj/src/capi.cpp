#include "ckc.h"

#include <cstring>
#include <string>

#include "ckc/driver.hpp"
#include "ckc/errors.hpp"
#include "ckc/json_io.hpp"
#include "ckc/oracle.hpp"
#include "ckc/svg.hpp"

using namespace ckc;

struct ckc_instance {
  Instance inst;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ckc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const GuardError& e) {
    g_last_error = e.what();
    return CKC_ERR_GUARD;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return CKC_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return CKC_ERR_PARSE;
  } catch (const Error& e) {
    g_last_error = e.what();
    return CKC_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CKC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CKC_ERR_INTERNAL;
  }
}

Json parse_json(const char* text, const char* what) {
  if (text == nullptr) throw ParseError(std::string(what) + " is null");
  return Json::parse(text);
}

}  // namespace

extern "C" {

const char* ckc_version(void) { return "0.1.0"; }

const char* ckc_last_error(void) { return g_last_error.c_str(); }

void ckc_string_free(char* s) { delete[] s; }

void ckc_instance_free(ckc_instance* inst) { delete inst; }

ckc_status ckc_instance_parse(const char* json, ckc_instance** out) {
  return guarded([&]() {
    *out = new ckc_instance{instance_from_json(parse_json(json, "instance"))};
    return CKC_OK;
  });
}

ckc_status ckc_instance_to_json(const ckc_instance* inst, char** out) {
  return guarded([&]() {
    *out = dup_string(dump_json(instance_to_json(inst->inst)));
    return CKC_OK;
  });
}

ckc_status ckc_gen_example25(const char* scale_dec, ckc_instance** out) {
  return guarded([&]() {
    *out = new ckc_instance{gen_example_2_5(rat_from_string(scale_dec ? scale_dec : "1"))};
    return CKC_OK;
  });
}

ckc_status ckc_gen_separated(int n, int k, int c, const char* alpha_dec, const char* rho_dec,
                             uint64_t seed, int outliers, ckc_instance** out) {
  return guarded([&]() {
    SeparatedParams p;
    p.n = n;
    p.k = k;
    p.c = c;
    p.alpha = rat_from_string(alpha_dec ? alpha_dec : "8.25");
    p.rho = rat_from_string(rho_dec ? rho_dec : "1");
    p.seed = seed;
    p.outliers = outliers;
    *out = new ckc_instance{gen_separated(p)};
    return CKC_OK;
  });
}

ckc_status ckc_gen_random(int n, int k, int c, int matrix_metric, uint64_t seed, ckc_instance** out) {
  return guarded([&]() {
    *out = new ckc_instance{matrix_metric ? gen_random_metric(n, k, c, seed)
                                          : gen_random_planar(n, k, c, seed)};
    return CKC_OK;
  });
}

ckc_status ckc_verify(const ckc_instance* inst, const char* solution_json, char** report_json) {
  return guarded([&]() {
    const Solution sol =
        solution_from_json(parse_json(solution_json, "solution"), inst->inst.num_colors());
    const CoverageReport rep = verify(inst->inst, sol);
    *report_json = dup_string(dump_json(coverage_to_json(rep)));
    return rep.feasible ? CKC_OK : CKC_INFEASIBLE;
  });
}

ckc_status ckc_solve(const ckc_instance* inst, const char* options_json, char** report_json) {
  return guarded([&]() {
    SolverConfig cfg;
    bool timing = false;
    if (options_json != nullptr && options_json[0] != '\0') {
      const Json opts = Json::parse(options_json);
      if (opts.contains("alpha")) cfg.alpha = rat_from_json(opts.at("alpha"));
      if (opts.contains("seed")) cfg.seed = opts.at("seed").get<std::uint64_t>();
      if (opts.contains("early_stop")) cfg.early_stop = opts.at("early_stop").get<bool>();
      if (opts.contains("k_override")) cfg.k_override = opts.at("k_override").get<int>();
      if (opts.contains("timing")) timing = opts.at("timing").get<bool>();
      if (opts.contains("radius_sq"))
        cfg.pinned_radius = Length::from_sq(rat_from_json(opts.at("radius_sq")));
      else if (opts.contains("radius"))
        cfg.pinned_radius = Length::from_value(rat_from_json(opts.at("radius")));
    }
    const RunReport rep = solve(inst->inst, cfg);
    *report_json = dup_string(dump_json(runreport_to_json(rep, timing)));
    return rep.feasible ? CKC_OK : CKC_INFEASIBLE;
  });
}

ckc_status ckc_oracle(const ckc_instance* inst, char** result_json) {
  return guarded([&]() {
    *result_json = dup_string(dump_json(oracle_to_json(brute_force_optimum(inst->inst))));
    return CKC_OK;
  });
}

ckc_status ckc_match_support(const char* graph_json, const char* bounds_json, uint64_t seed,
                             char** support_json) {
  return guarded([&]() {
    const WeightedGraph g = graph_from_json(parse_json(graph_json, "graph"));
    std::vector<long> bounds;
    if (bounds_json != nullptr && bounds_json[0] != '\0')
      bounds = Json::parse(bounds_json).get<std::vector<long>>();
    else
      bounds = default_degree_bounds(g);
    const SupportTable table = support(g, bounds, seed);
    *support_json = dup_string(dump_json(support_to_json(table)));
    return CKC_OK;
  });
}

ckc_status ckc_match_recover(const char* graph_json, const char* target_json, uint64_t seed,
                             char** result_json) {
  return guarded([&]() {
    const WeightedGraph g = graph_from_json(parse_json(graph_json, "graph"));
    const std::vector<long> target = parse_json(target_json, "target").get<std::vector<long>>();
    const auto matched = recover(g, target, seed);
    Json j;
    j["target"] = target;
    j["seed"] = seed;
    if (matched) {
      Json edges = Json::array();
      for (int idx : *matched) edges.push_back(Json::array({g.edges[idx].u, g.edges[idx].v}));
      j["matching"] = std::move(edges);
      j["edge_indices"] = *matched;
    } else {
      j["matching"] = nullptr;
    }
    *result_json = dup_string(dump_json(j));
    return matched ? CKC_OK : CKC_INFEASIBLE;
  });
}

ckc_status ckc_plot(const ckc_instance* inst, const char* options_json, char** svg) {
  return guarded([&]() {
    PlotOptions opts;
    if (options_json != nullptr && options_json[0] != '\0') {
      const Json j = Json::parse(options_json);
      if (j.contains("alpha")) opts.alpha = rat_from_json(j.at("alpha"));
      if (j.contains("rho_sq"))
        opts.rho = Length::from_sq(rat_from_json(j.at("rho_sq")));
      else if (j.contains("rho"))
        opts.rho = Length::from_value(rat_from_json(j.at("rho")));
      if (j.contains("seed")) opts.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("solution") && !j.at("solution").is_null())
        opts.solution = solution_from_json(j.at("solution"), inst->inst.num_colors());
    }
    *svg = dup_string(render_svg(inst->inst, opts));
    return CKC_OK;
  });
}

}  // extern "C"
