#pragma once

#include <json.hpp>

#include "finejac/classify.hpp"

namespace finejac {

using json = nlohmann::json;

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

json graph_to_json(const Graph& gr);
Graph graph_from_json(const json& j);

json triple_to_json(const Triple& t);
Triple triple_from_json(const json& j);

// {"g","n","d","values":[{"e","h","A","m"},...]} over canonical
// representatives; readers accept redundant complements but verify the
// pair-sum law on them.
json universal_to_json(const UniversalStability& m);
UniversalStability universal_from_json(const json& j);

json system_to_json(const LinearSystem& s);
LinearSystem system_from_json(const json& j);

json outcome_to_json(const Outcome& o);
json verdict_to_json(const ClassicalityVerdict& v);

json census_to_json(const CensusReport& r);
std::string census_to_csv(const CensusReport& r);

json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

}  // namespace finejac
