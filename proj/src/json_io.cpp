#include "ckc/json_io.hpp"

#include "ckc/errors.hpp"

namespace ckc {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_number_unsigned()) return Rat(static_cast<unsigned long>(j.get<unsigned long long>()));
  if (j.is_number_float()) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), j.get<double>());  // exact binary64 value
    return q;
  }
  throw ParseError("expected a number or numeric string");
}

void put_length(Json& obj, const std::string& key, const Length& l) {
  obj[key] = length_display(l);
  obj[key + "_sq"] = rat_to_string(l.sq);
}

Length length_from_json(const Json& obj, const std::string& key) {
  if (obj.contains(key + "_sq")) return Length::from_sq(rat_from_json(obj.at(key + "_sq")));
  const Rat v = rat_from_json(obj.at(key));
  if (sgn(v) < 0) throw ParseError("negative " + key);
  return Length::from_value(v);
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["k"] = inst.k;
  j["requirements"] = inst.requirements;
  if (inst.metric == MetricKind::EuclideanPlane) {
    Json pts = Json::array();
    for (int i = 0; i < inst.n(); ++i) {
      Json p;
      p["x"] = rat_to_string(inst.coords[i].first);
      p["y"] = rat_to_string(inst.coords[i].second);
      p["color"] = inst.colors[i];
      pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
  } else {
    j["n"] = inst.n();
    j["colors"] = inst.colors;
    Json rows = Json::array();
    for (const auto& row : inst.dist) {
      Json r = Json::array();
      for (const Rat& d : row) r.push_back(rat_to_string(d));
      rows.push_back(std::move(r));
    }
    j["dist"] = std::move(rows);
  }
  if (inst.planted) {
    Json p;
    p["centers"] = inst.planted->centers;
    put_length(p, "radius", inst.planted->radius);
    j["planted"] = std::move(p);
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance JSON must be an object");
  Instance inst;
  inst.k = j.at("k").get<int>();
  inst.requirements = j.at("requirements").get<std::vector<long>>();
  if (j.contains("points")) {
    inst.metric = MetricKind::EuclideanPlane;
    for (const Json& p : j.at("points")) {
      inst.coords.emplace_back(rat_from_json(p.at("x")), rat_from_json(p.at("y")));
      inst.colors.push_back(p.at("color").get<int>());
    }
  } else if (j.contains("dist")) {
    inst.metric = MetricKind::Matrix;
    inst.colors = j.at("colors").get<std::vector<int>>();
    const int n = j.at("n").get<int>();
    if (static_cast<int>(inst.colors.size()) != n) throw ParseError("colors length != n");
    for (const Json& row : j.at("dist")) {
      std::vector<Rat> r;
      for (const Json& d : row) r.push_back(rat_from_json(d));
      inst.dist.push_back(std::move(r));
    }
  } else {
    throw ParseError("instance JSON needs either points or dist");
  }
  if (j.contains("planted")) {
    PlantedInfo p;
    p.centers = j.at("planted").at("centers").get<std::vector<int>>();
    p.radius = length_from_json(j.at("planted"), "radius");
    inst.planted = std::move(p);
  }
  inst.validate();
  return inst;
}

Json solution_to_json(const Solution& sol) {
  Json j;
  j["centers"] = sol.centers;
  put_length(j, "radius", sol.radius);
  j["covered"] = sol.covered;
  j["feasible"] = sol.feasible;
  return j;
}

Solution solution_from_json(const Json& j, int num_colors) {
  Solution sol;
  sol.centers = j.at("centers").get<std::vector<int>>();
  sol.radius = length_from_json(j, "radius");
  if (j.contains("covered")) sol.covered = j.at("covered").get<std::vector<long>>();
  sol.covered.resize(num_colors, 0);
  if (j.contains("feasible")) sol.feasible = j.at("feasible").get<bool>();
  return sol;
}

Json coverage_to_json(const CoverageReport& rep) {
  Json j;
  j["covered"] = rep.covered;
  j["feasible"] = rep.feasible;
  j["num_centers"] = rep.num_centers;
  put_length(j, "radius", rep.radius);
  return j;
}

Json runreport_to_json(const RunReport& rep, bool with_timing) {
  Json j;
  j["status"] = rep.feasible ? "feasible" : "infeasible";
  j["alpha"] = rat_to_string(rep.alpha);
  j["seed"] = rep.seed;
  if (rep.best) {
    j["best"] = solution_to_json(*rep.best);
    Json prov;
    put_length(prov, "rho", rep.provenance.rho);
    prov["branch"] = rep.provenance.branch;
    prov["sbar"] = rep.provenance.sbar;
    j["provenance"] = std::move(prov);
  } else {
    j["best"] = nullptr;
  }
  Json guesses = Json::array();
  for (const GuessReport& g : rep.guesses) {
    Json jg;
    put_length(jg, "rho", g.rho);
    Json branch_a = Json::array();
    for (const BranchACase& bc : g.branch_a) {
      Json jb;
      jb["budget"] = bc.budget;
      jb["status"] = bc.status;
      if (bc.status == "solution") {
        jb["centers"] = bc.centers;
        jb["accepted"] = bc.accepted;
      }
      branch_a.push_back(std::move(jb));
    }
    jg["pseudo"] = std::move(branch_a);
    Json branch_b = Json::array();
    for (const BranchBCase& bb : g.branch_b) {
      Json jb;
      jb["sbar"] = bb.sbar;
      jb["status"] = bb.status;
      if (bb.status == "solution") jb["centers"] = bb.centers;
      branch_b.push_back(std::move(jb));
    }
    jg["separated"] = std::move(branch_b);
    guesses.push_back(std::move(jg));
  }
  j["guesses"] = std::move(guesses);
  j["matching_support_calls"] = rep.matching_support_calls;
  j["matching_recover_calls"] = rep.matching_recover_calls;
  if (with_timing) j["wall_ms"] = rep.wall_ms;
  return j;
}

Json oracle_to_json(const OracleResult& res) {
  Json j;
  put_length(j, "radius", res.radius);
  j["centers"] = res.best_centers;
  j["optimal_set_count"] = res.optimal_sets.size();
  j["optimal_sets_capped"] = res.optimal_sets_capped;
  Json sets = Json::array();
  const size_t shown = std::min<size_t>(res.optimal_sets.size(), 50);
  for (size_t i = 0; i < shown; ++i) sets.push_back(res.optimal_sets[i]);
  j["optimal_sets"] = std::move(sets);
  j["combos_enumerated"] = res.combos_enumerated;
  return j;
}

Json graph_to_json(const WeightedGraph& g) {
  Json j;
  j["n"] = g.n;
  j["colors"] = g.colors;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v, e.w}));
  j["edges"] = std::move(edges);
  return j;
}

WeightedGraph graph_from_json(const Json& j) {
  WeightedGraph g;
  g.n = j.at("n").get<int>();
  for (const Json& row : j.at("edges")) {
    WeightedGraph::Edge e;
    e.u = row.at(0).get<int>();
    e.v = row.at(1).get<int>();
    e.w = row.at(2).get<std::vector<long>>();
    g.edges.push_back(std::move(e));
  }
  if (j.contains("colors"))
    g.colors = j.at("colors").get<int>();
  else if (!g.edges.empty())
    g.colors = static_cast<int>(g.edges.front().w.size());
  g.check();
  return g;
}

Json support_to_json(const SupportTable& t) {
  Json j;
  j["bounds"] = t.bounds;
  j["prime"] = std::to_string(t.prime);
  j["seed"] = t.seed;
  Json list = Json::array();
  for (const auto& w : t.achievable_list()) list.push_back(w);
  j["achievable"] = std::move(list);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ckc
