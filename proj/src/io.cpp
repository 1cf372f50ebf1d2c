#include "ore/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "ore/errors.hpp"

namespace ore {

namespace {

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object()) throw FormatError("expected a JSON object", name);
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError("missing field", name);
  return *it;
}

std::string text(const Json& j, const std::string& name) {
  if (!j.is_string()) throw FormatError("expected a string", name);
  return j.get<std::string>();
}

std::vector<std::string> labels(const Json& j, const std::string& name) {
  if (!j.is_array()) throw FormatError("expected an array of labels", name);
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(text(x, name));
  return out;
}

PointSetPtr point_set(const Json& j, const std::string& name) {
  try {
    return make_point_set(labels(j, name));
  } catch (const FormatError& e) {
    if (e.field() == name) throw;
    throw FormatError(e.what(), name);
  }
}

std::size_t lookup(const PointSet& points, const Json& j, const std::string& name) {
  const auto label = text(j, name);
  if (auto i = points.find(label)) return *i;
  throw FormatError("unknown point '" + label + "'", name);
}

std::vector<GeneratorEdge> edge_list(const Json& j, const PointSet& vertices, std::size_t generator,
                                     const std::string& name) {
  if (!j.is_array()) throw FormatError("expected an array of edges", name);
  std::vector<GeneratorEdge> out;
  for (const auto& e : j) {
    out.push_back({text(field(e, "id"), name + ".id"), generator, lookup(vertices, field(e, "src"), name + ".src"),
                   lookup(vertices, field(e, "rng"), name + ".rng")});
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'", "file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON in '") + path + "': " + e.what(), "file");
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Graph graph_from_json(const Json& j) {
  const auto vertices = point_set(field(j, "vertices"), "vertices");
  auto raw = edge_list(field(j, "edges"), *vertices, 0, "edges");
  std::set<std::string> ids;
  std::vector<Edge> edges;
  for (auto& e : raw) {
    if (!ids.insert(e.id).second) throw FormatError("duplicate edge id '" + e.id + "'", "edges");
    edges.push_back({std::move(e.id), e.src, e.rng});
  }
  return Graph(vertices, std::move(edges));
}

Json graph_to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(Json{{"id", e.id}, {"src", graph.vertices().label(e.src)}, {"rng", graph.vertices().label(e.rng)}});
  }
  return Json{{"vertices", graph.vertices().labels()}, {"edges", edges}};
}

MultiMap multimap_from_json(const Json& j) {
  const auto domain = point_set(field(j, "points"), "points");
  const auto codomain = j.contains("codomain") ? point_set(j["codomain"], "codomain") : domain;
  const auto& map = field(j, "map");
  if (!map.is_object()) throw FormatError("expected an object from points to lists", "map");
  std::vector<MultiMap::Pair> pairs;
  for (const auto& [key, targets] : map.items()) {
    const auto x = domain->find(key);
    if (!x) throw FormatError("unknown point '" + key + "'", "map");
    if (!targets.is_array()) throw FormatError("expected a list of targets for '" + key + "'", "map");
    for (const auto& y : targets) pairs.emplace_back(*x, lookup(*codomain, y, "map"));
  }
  return MultiMap(domain, codomain, std::move(pairs));
}

Json multimap_to_json(const MultiMap& f) {
  Json map = Json::object();
  for (std::size_t x = 0; x < f.domain_set().size(); ++x) {
    const auto ys = f.at(x);
    if (ys.empty()) continue;
    Json targets = Json::array();
    for (auto y : ys) targets.push_back(f.codomain_set().label(y));
    map[f.domain_set().label(x)] = targets;
  }
  Json out{{"points", f.domain_set().labels()}};
  if (!f.is_endomap()) out["codomain"] = f.codomain_set().labels();
  out["map"] = map;
  return out;
}

Table table_from_json(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) throw FormatError("expected an array of rows", "table");
  Table table;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError("expected an array of entries", "table");
    std::vector<std::size_t> out;
    for (const auto& entry : row) {
      if (entry.is_number_unsigned()) {
        out.push_back(entry.get<std::size_t>());
      } else if (entry.is_string()) {
        const auto it = std::find(names.begin(), names.end(), entry.get<std::string>());
        if (it == names.end()) throw FormatError("unknown element '" + entry.get<std::string>() + "'", "table");
        out.push_back(static_cast<std::size_t>(it - names.begin()));
      } else {
        throw FormatError("entries must be element names or indices", "table");
      }
    }
    table.push_back(std::move(out));
  }
  return table;
}

OreSemigroup group_from_json(const Json& j) {
  const auto names = labels(field(j, "elements"), "elements");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    throw FormatError("duplicate element names", "elements");
  }
  auto table = table_from_json(field(j, "table"), names);
  const auto id_name = text(field(j, "identity"), "identity");
  const auto it = std::find(names.begin(), names.end(), id_name);
  if (it == names.end()) throw FormatError("identity is not an element", "identity");
  if (table.size() != names.size()) throw FormatError("table size differs from the element count", "table");
  try {
    return OreSemigroup::finite_group(std::move(table), static_cast<std::size_t>(it - names.begin()), names);
  } catch (const DomainError& e) {
    throw FormatError(e.what(), "table");
  }
}

Json group_to_json(const OreSemigroup& group) {
  const auto& names = group.element_names();
  Json table = Json::array();
  for (const auto& row : group.table()) {
    Json r = Json::array();
    for (auto x : row) r.push_back(names[x]);
    table.push_back(r);
  }
  return Json{{"elements", names},
              {"identity", names[static_cast<std::size_t>(group.identity().value[0])]},
              {"table", table}};
}

PartialAction partial_action_from_json(const Json& j) {
  const auto carrier = point_set(field(j, "points"), "points");
  auto group = group_from_json(field(j, "group"));
  const auto& names = group.element_names();
  const auto& action = field(j, "action");
  if (!action.is_object()) throw FormatError("expected an object from elements to maps", "action");
  std::map<std::size_t, PartialBijection> theta;
  for (const auto& [g_name, map] : action.items()) {
    const auto it = std::find(names.begin(), names.end(), g_name);
    if (it == names.end()) throw FormatError("unknown group element '" + g_name + "'", "action");
    if (!map.is_object()) throw FormatError("expected an object from points to points", "action." + g_name);
    std::vector<MultiMap::Pair> pairs;
    for (const auto& [x, y] : map.items()) {
      const auto xi = carrier->find(x);
      if (!xi) throw FormatError("unknown point '" + x + "'", "action." + g_name);
      pairs.emplace_back(*xi, lookup(*carrier, y, "action." + g_name));
    }
    try {
      theta.emplace(static_cast<std::size_t>(it - names.begin()),
                    PartialBijection(MultiMap(carrier, carrier, std::move(pairs))));
    } catch (const DomainError& e) {
      throw FormatError(e.what(), "action." + g_name);
    }
  }
  return PartialAction(carrier, std::move(group), std::move(theta));
}

Json partial_action_to_json(const PartialAction& action) {
  const auto& names = action.group().element_names();
  Json out_action = Json::object();
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    if (!action.has_theta(g)) continue;
    Json map = Json::object();
    for (const auto& [x, y] : action.theta(g).map().pairs()) map[action.carrier().label(x)] = action.carrier().label(y);
    out_action[names[g]] = map;
  }
  return Json{{"points", action.carrier().labels()}, {"group", group_to_json(action.group())}, {"action", out_action}};
}

PGraph pgraph_from_json(const Json& j) {
  const auto semigroup = parse_semigroup_spec(text(field(j, "semigroup"), "semigroup"));
  const auto vertices = point_set(field(j, "vertices"), "vertices");
  const auto& fibers = field(j, "fibers");
  if (!fibers.is_object()) throw FormatError("expected an object from degrees to edge lists", "fibers");

  std::vector<Element> generators;
  if (semigroup.family() == Family::nat_add) {
    for (std::size_t i = 0; i < semigroup.rank(); ++i) {
      Element unit{std::vector<std::int64_t>(semigroup.rank(), 0)};
      unit.value[i] = 1;
      generators.push_back(unit);
    }
  }
  std::vector<std::pair<Element, const Json*>> listed;
  for (const auto& [key, edges] : fibers.items()) {
    Element degree;
    try {
      degree = semigroup.parse_element(key);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), "fibers");
    }
    listed.emplace_back(degree, &edges);
    if (semigroup.family() == Family::nat_mult) generators.push_back(degree);
    if (semigroup.family() == Family::nat_add &&
        std::find(generators.begin(), generators.end(), degree) == generators.end()) {
      throw FormatError("fiber degree '" + key + "' is not a unit vector", "fibers");
    }
  }
  std::sort(generators.begin(), generators.end());
  if (std::adjacent_find(generators.begin(), generators.end()) != generators.end()) {
    throw FormatError("a degree is listed twice", "fibers");
  }
  if (semigroup.family() == Family::nat_add) {
    // Unit vectors sorted descending as vectors are e_1, e_2, ...; restore index order.
    std::sort(generators.begin(), generators.end(), [](const Element& a, const Element& b) { return b < a; });
  }

  std::vector<GeneratorEdge> edges;
  for (const auto& [degree, list] : listed) {
    const auto g = static_cast<std::size_t>(std::find(generators.begin(), generators.end(), degree) -
                                            generators.begin());
    auto fiber = edge_list(*list, *vertices, g, "fibers." + semigroup.format_element(degree));
    edges.insert(edges.end(), fiber.begin(), fiber.end());
  }

  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!ids.emplace(edges[i].id, i).second) throw FormatError("duplicate edge id '" + edges[i].id + "'", "fibers");
  }
  const auto edge = [&](const Json& x) {
    const auto id = text(x, "squares");
    const auto it = ids.find(id);
    if (it == ids.end()) throw FormatError("unknown edge '" + id + "'", "squares");
    return it->second;
  };

  std::vector<Square> squares;
  const Json empty = Json::array();
  const auto& sq_json = j.contains("squares") ? j["squares"] : empty;
  if (!sq_json.is_array()) throw FormatError("expected an array of squares", "squares");
  for (const auto& sq : sq_json) {
    if (!sq.is_object() || sq.size() != 2) throw FormatError("a square holds exactly two pairs", "squares");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, pair] : sq.items()) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("pair '" + key + "' needs two edge ids", "squares");
      pairs.emplace_back(edge(pair[0]), edge(pair[1]));
    }
    const auto ordered = [&](const std::pair<std::size_t, std::size_t>& p) {
      return edges[p.first].generator < edges[p.second].generator;
    };
    if (ordered(pairs[1]) && !ordered(pairs[0])) std::swap(pairs[0], pairs[1]);
    if (!ordered(pairs[0]) || ordered(pairs[1])) {
      throw FormatError("exactly one pair of a square must list its generators in order", "squares");
    }
    squares.push_back({pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second});
  }
  return PGraph(semigroup, vertices, std::move(generators), std::move(edges), std::move(squares));
}

Json pgraph_to_json(const PGraph& pg) {
  Json fibers = Json::object();
  for (std::size_t g = 0; g < pg.rank(); ++g) {
    Json list = Json::array();
    for (const auto& e : pg.edges()) {
      if (e.generator != g) continue;
      list.push_back(Json{{"id", e.id}, {"src", pg.vertices().label(e.src)}, {"rng", pg.vertices().label(e.rng)}});
    }
    fibers[pg.semigroup().format_element(pg.generators()[g])] = list;
  }
  Json squares = Json::array();
  for (const auto& sq : pg.squares()) {
    const auto& e = pg.edges();
    squares.push_back(Json{{"bf", Json::array({e[sq.canonical_first].id, e[sq.canonical_second].id})},
                           {"fb", Json::array({e[sq.swapped_first].id, e[sq.swapped_second].id})}});
  }
  return Json{{"semigroup", pg.semigroup().describe()},
              {"vertices", pg.vertices().labels()},
              {"fibers", fibers},
              {"squares", squares}};
}

}  // namespace ore
