#pragma once

#include <json.hpp>

#include "ckc/driver.hpp"
#include "ckc/instance.hpp"
#include "ckc/matching.hpp"
#include "ckc/oracle.hpp"

namespace ckc {

// Field order is fixed (ordered_json) so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

/// Numeric fields accept decimal strings, "num/den" strings, integers, and
/// floats (interpreted as their exact binary64 value).
Rat rat_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json solution_to_json(const Solution& sol);
Solution solution_from_json(const Json& j, int num_colors);

Json coverage_to_json(const CoverageReport& rep);

/// Emits {"radius": display, "radius_sq": exact} style pairs.
void put_length(Json& obj, const std::string& key, const Length& l);
Length length_from_json(const Json& obj, const std::string& key);

/// Wall time is deliberately left out unless with_timing is set, so reports
/// for a fixed (input, flags, seed) stay byte-identical.
Json runreport_to_json(const RunReport& rep, bool with_timing = false);

Json oracle_to_json(const OracleResult& res);

Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

Json support_to_json(const SupportTable& t);

std::string dump_json(const Json& j);

}  // namespace ckc
