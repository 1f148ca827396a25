#pragma once

#include "plap/graph.hpp"
#include "plap/linear.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace plap {

using Json = nlohmann::json;

/// Accepts an integer or a "p/q" string. Anything else throws
/// std::invalid_argument.
Rat rat_from_json(const Json& j);
/// Integer when the denominator is 1 and the value fits in int64, string
/// "p/q" otherwise.
Json rat_to_json(const Rat& r);

WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);

/// The "omega" array; when absent, every vertex id in file order.
std::vector<std::string> omega_from_json(const Json& j, const WeightedGraph& g);

/// Partition file: {"cells":[[ids]]}.
std::vector<std::vector<std::string>> cells_from_json(const Json& j);
Json cells_to_json(const std::vector<std::vector<std::string>>& cells);

/// Model file: {"family":"tree"|"antitree", "branching":[ints] (trees) or
/// "order":int (anti-trees), "scheme":"physical"|"modified"|"normalized",
/// "horizon":int (optional, default 200)}. Throws InvalidSpec on shape or
/// value problems. Returns the spec together with the horizon.
std::pair<ModelSpec, int> model_spec_from_json(const Json& j);
Json model_spec_to_json(const ModelSpec& spec, int horizon);

/// Parses a file, wrapping parse failures in std::invalid_argument.
Json load_json_file(const std::string& path);

} // namespace plap
