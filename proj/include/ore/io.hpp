#pragma once

#include <string>

#include "ore/graph.hpp"
#include "ore/multimap.hpp"
#include "ore/partial_action.hpp"
#include "ore/pgraph.hpp"
#include "ore/semigroup.hpp"
#include "ore/verdict.hpp"

namespace ore {

// Every loader throws FormatError naming the offending field.

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// {"vertices": [...], "edges": [{"id", "src", "rng"}, ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& graph);

/// {"points": [...], "map": {"x": ["y", ...], ...}}, with an optional
/// "codomain" list when the target carrier differs.
MultiMap multimap_from_json(const Json& j);
Json multimap_to_json(const MultiMap& f);

/// {"elements": [...], "identity": name, "table": [[...], ...]}; table
/// entries are element names or indices.
Table table_from_json(const Json& j, const std::vector<std::string>& names);
OreSemigroup group_from_json(const Json& j);
Json group_to_json(const OreSemigroup& group);

/// {"points": [...], "group": {...}, "action": {"g": {"x": "y", ...}, ...}}
PartialAction partial_action_from_json(const Json& j);
Json partial_action_to_json(const PartialAction& action);

/// {"semigroup": "natadd:2", "vertices": [...],
///  "fibers": {"(1,0)": [edges], ...}, "squares": [{"bf": [x, y], "fb": [y', x']}, ...]}
/// Each square lists two composable pairs in composition order; the pair
/// whose first edge has the lower generator is the normal form.
PGraph pgraph_from_json(const Json& j);
Json pgraph_to_json(const PGraph& pgraph);

}  // namespace ore
