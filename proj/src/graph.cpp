#include "ore/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "ore/errors.hpp"

namespace ore {

namespace {

constexpr const char* kRegularityRule = "graph:regularity (every vertex receives an edge)";
constexpr const char* kAperiodicityRule = "graph:aperiodicity (discrete graph: no cycles)";
constexpr const char* kFreenessRule = "graph:topological-freeness (every cycle has an entry)";
constexpr const char* kMinimalityRule = "graph:minimality (only trivial sets with X(V)=V)";

constexpr const char* kIrregularCaveat =
    "graph is not regular: the verdict is combinatorial only, no theorem-backed conclusion";

// Masks are 64-bit, so enumeration never goes past 62 vertices whatever the bound.
constexpr std::size_t kHardMaskLimit = 62;

std::vector<std::vector<std::size_t>> out_edges(const Graph& graph) {
  std::vector<std::vector<std::size_t>> out(graph.vertex_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) out[graph.edges()[e].src].push_back(e);
  return out;
}

bool regular(const Graph& graph) {
  std::vector<char> receives(graph.vertex_count(), 0);
  for (const auto& e : graph.edges()) receives[e.rng] = 1;
  return std::all_of(receives.begin(), receives.end(), [](char c) { return c != 0; });
}

void require_enumerable(const Graph& graph, std::size_t bound) {
  const auto n = graph.vertex_count();
  if (n > bound || n > kHardMaskLimit) {
    throw BoundError("invariant-set enumeration over " + std::to_string(n) +
                     " vertices exceeds the bound of " + std::to_string(std::min(bound, kHardMaskLimit)));
  }
}

Subset mask_to_subset(std::uint64_t mask) {
  Subset out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

Graph::Graph(PointSetPtr vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (!vertices_) throw DomainError("graph needs a vertex set");
  for (const auto& e : edges_) {
    if (e.src >= vertices_->size() || e.rng >= vertices_->size()) {
      throw DomainError("edge '" + e.id + "' has an endpoint outside the vertex set");
    }
  }
}

std::size_t Graph::in_degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.rng == v; }));
}

Verdict check_regularity(const Graph& graph) {
  std::vector<char> receives(graph.vertex_count(), 0);
  for (const auto& e : graph.edges()) receives[e.rng] = 1;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (!receives[v]) {
      return Verdict::fails(kRegularityRule, Json{{"vertex", graph.vertices().label(v)}},
                            graph.vertices().label(v) + " receives no edge");
    }
  }
  return Verdict::holds(kRegularityRule, "row-finite and without sources");
}

MultiMap dual_map(const Graph& graph) {
  std::vector<MultiMap::Pair> pairs;
  pairs.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) pairs.emplace_back(e.src, e.rng);
  return MultiMap(graph.vertices_ptr(), graph.vertices_ptr(), std::move(pairs));
}

Graph from_map(PointSetPtr points, std::span<const std::size_t> sigma) {
  if (sigma.size() != points->size()) throw DomainError("sigma must be defined on every point");
  std::vector<Edge> edges;
  edges.reserve(sigma.size());
  for (std::size_t t = 0; t < sigma.size(); ++t) {
    if (sigma[t] >= points->size()) throw DomainError("sigma leaves the point set");
    edges.push_back({points->label(t), sigma[t], t});
  }
  return Graph(std::move(points), std::move(edges));
}

Verdict check_surjective_map(const PointSet& points, std::span<const std::size_t> sigma) {
  std::vector<char> hit(points.size(), 0);
  for (auto v : sigma) {
    if (v >= points.size()) throw DomainError("sigma leaves the point set");
    hit[v] = 1;
  }
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (!hit[t]) {
      return Verdict::fails("map:surjectivity", Json{{"point", points.label(t)}},
                            "the fibre over " + points.label(t) + " is empty");
    }
  }
  return Verdict::holds("map:surjectivity");
}

std::optional<Cycle> find_cycle(const Graph& graph) {
  const auto n = graph.vertex_count();
  const auto out = out_edges(graph);
  std::vector<std::size_t> parent(n);
  std::vector<char> seen(n);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(v);
    seen[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (auto e : out[u]) {
        const auto w = graph.edges()[e].rng;
        if (w == v) {
          Cycle cycle{e};
          for (auto x = u; x != v; x = graph.edges()[parent[x]].src) cycle.push_back(parent[x]);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = e;
          queue.push_back(w);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_cycle(const Graph& graph, const Cycle& cycle) {
  if (cycle.empty()) return false;
  for (auto e : cycle) {
    if (e >= graph.edge_count()) return false;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& cur = graph.edges()[cycle[i]];
    const auto& next = graph.edges()[cycle[(i + 1) % cycle.size()]];
    if (cur.rng != next.src) return false;
  }
  return true;
}

bool is_cycle_without_entries(const Graph& graph, const Cycle& cycle) {
  if (!is_cycle(graph, cycle)) return false;
  for (auto e : cycle) {
    const auto v = graph.edges()[e].rng;
    for (std::size_t f = 0; f < graph.edge_count(); ++f) {
      if (f != e && graph.edges()[f].rng == v) return false;
    }
  }
  return true;
}

Verdict is_aperiodic(const Graph& graph) {
  const auto cycle = find_cycle(graph);

  const auto dual = dual_map(graph);
  bool periodic = false;
  auto power = dual;
  for (std::size_t n = 1; n <= graph.vertex_count() && !periodic; ++n) {
    for (std::size_t v = 0; v < graph.vertex_count() && !periodic; ++v) periodic = power.contains(v, v);
    power = compose(dual, power);
  }
  if (periodic != cycle.has_value()) {
    throw std::logic_error("cycle search and periodic points of the dual map disagree");
  }

  Verdict verdict = cycle
      ? Verdict::fails(kAperiodicityRule, Json{{"cycle", cycle_to_json(graph, *cycle)}},
                       "base point " + graph.vertices().label(graph.edges()[cycle->front()].src) +
                           " is periodic for the dual map")
      : Verdict::holds(kAperiodicityRule, "no cycles; the graph algebra is AF");
  if (!regular(graph)) verdict.caveats.emplace_back(kIrregularCaveat);
  return verdict;
}

Verdict is_topologically_free(const Graph& graph) {
  const auto n = graph.vertex_count();
  std::vector<std::size_t> in_count(n, 0);
  std::vector<std::size_t> in_edge(n, 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto v = graph.edges()[e].rng;
    ++in_count[v];
    in_edge[v] = e;
  }

  Verdict verdict = Verdict::holds(kFreenessRule, "every cycle has an entry");
  for (std::size_t v = 0; v < n; ++v) {
    if (in_count[v] != 1) continue;
    Cycle backwards;
    auto cur = v;
    bool closed = false;
    for (std::size_t step = 0; step < n; ++step) {
      const auto e = in_edge[cur];
      backwards.push_back(e);
      cur = graph.edges()[e].src;
      if (cur == v) {
        closed = true;
        break;
      }
      if (in_count[cur] != 1) break;
    }
    if (closed) {
      Cycle cycle(backwards.rbegin(), backwards.rend());
      verdict = Verdict::fails(kFreenessRule, Json{{"cycle_without_entries", cycle_to_json(graph, cycle)}},
                               "base point " + graph.vertices().label(v) +
                                   " is isolated, so its interior is not empty");
      break;
    }
  }
  if (!regular(graph)) verdict.caveats.emplace_back(kIrregularCaveat);
  return verdict;
}

std::vector<Subset> invariant_sets_by_dual(const Graph& graph, std::size_t bound) {
  require_enumerable(graph, bound);
  const auto n = graph.vertex_count();
  const auto dual = dual_map(graph);
  std::vector<std::uint64_t> image_of(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : dual.at(v)) image_of[v] |= std::uint64_t{1} << w;
  }
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint64_t image = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) image |= image_of[v];
    }
    if (image == mask) out.push_back(mask_to_subset(mask));
  }
  return out;
}

std::vector<Subset> invariant_sets_by_edges(const Graph& graph, std::size_t bound) {
  require_enumerable(graph, bound);
  const auto n = graph.vertex_count();
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool forward_closed = true;
    std::uint64_t fed = 0;
    for (const auto& e : graph.edges()) {
      const bool src_in = mask >> e.src & 1U;
      if (src_in && !(mask >> e.rng & 1U)) {
        forward_closed = false;
        break;
      }
      if (src_in) fed |= std::uint64_t{1} << e.rng;
    }
    if (forward_closed && (mask & ~fed) == 0) out.push_back(mask_to_subset(mask));
  }
  return out;
}

std::vector<Subset> invariant_sets(const Graph& graph, std::size_t bound) {
  auto by_dual = invariant_sets_by_dual(graph, bound);
  if (by_dual != invariant_sets_by_edges(graph, bound)) {
    throw std::logic_error("invariant sets from the dual map and from the edge conditions disagree");
  }
  return by_dual;
}

bool is_invariant_set(const Graph& graph, const Subset& v) {
  for (auto x : v) {
    if (x >= graph.vertex_count()) return false;
  }
  return dual_map(graph).apply(v) == v;
}

Verdict is_minimal(const Graph& graph, std::size_t bound) {
  const auto sets = invariant_sets(graph, bound);
  Verdict verdict = Verdict::holds(kMinimalityRule, std::to_string(sets.size()) + " invariant set(s), all trivial");
  for (const auto& v : sets) {
    if (!v.empty() && v.size() < graph.vertex_count()) {
      verdict = Verdict::fails(kMinimalityRule, Json{{"invariant_set", subset_to_json(graph.vertices(), v)}},
                               "nontrivial closed set with X(V)=V");
      break;
    }
  }
  if (!regular(graph)) verdict.caveats.emplace_back(kIrregularCaveat);
  return verdict;
}

std::vector<Rational> transfer_operator(std::span<const std::size_t> sigma, std::span<const Rational> a) {
  const auto n = sigma.size();
  if (a.size() != n) throw DomainError("transfer operator: function and map sizes differ");
  std::vector<Rational> sum(n, Rational(0));
  std::vector<std::int64_t> fibre(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (sigma[s] >= n) throw DomainError("sigma leaves the point set");
    sum[sigma[s]] += a[s];
    ++fibre[sigma[s]];
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (fibre[t] == 0) {
      throw DomainError("transfer operator undefined: the fibre over point " + std::to_string(t) + " is empty");
    }
    sum[t] /= fibre[t];
  }
  return sum;
}

SimplicityReport simplicity_report(const Graph& graph, std::size_t bound) {
  SimplicityReport report{check_regularity(graph), is_aperiodic(graph), is_topologically_free(graph),
                          is_minimal(graph, bound), {}, {}};
  if (report.regularity.is_fails()) report.unmet.emplace_back("regularity");
  if (report.aperiodicity.is_fails()) report.unmet.emplace_back("aperiodicity");
  if (report.minimality.is_fails()) report.unmet.emplace_back("minimality");

  if (report.regularity.is_holds() && report.aperiodicity.is_holds()) {
    report.conclusion = report.minimality.is_holds() ? "uniqueness theorem applies; O_X^r simple"
                                                     : "uniqueness theorem applies";
  } else {
    std::string list;
    for (const auto& h : report.unmet) list += (list.empty() ? "" : ", ") + h;
    report.conclusion = "hypotheses not met: " + list;
  }
  return report;
}

Json cycle_to_json(const Graph& graph, const Cycle& cycle) {
  Json ids = Json::array();
  for (auto e : cycle) ids.push_back(graph.edges().at(e).id);
  return ids;
}

Json subset_to_json(const PointSet& points, const Subset& subset) {
  Json labels = Json::array();
  for (auto v : subset) labels.push_back(points.label(v));
  return labels;
}

}  // namespace ore
