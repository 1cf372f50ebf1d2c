#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ore/multimap.hpp"
#include "ore/rational.hpp"
#include "ore/verdict.hpp"

namespace ore {

/// Default cap on the vertex count for invariant-set enumeration (2²⁰ subsets).
inline constexpr std::size_t default_enumeration_bound = 20;

struct Edge {
  std::string id;
  std::size_t src;
  std::size_t rng;
};

/// A finite directed graph E = (E⁰, E¹, s, r), read as a topological graph
/// with the discrete topology.
class Graph {
 public:
  /// Throws DomainError if an endpoint is not a vertex.
  Graph(PointSetPtr vertices, std::vector<Edge> edges);

  const PointSet& vertices() const noexcept { return *vertices_; }
  const PointSetPtr& vertices_ptr() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_->size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Number of edges e with r(e) = v.
  std::size_t in_degree(std::size_t v) const;

 private:
  PointSetPtr vertices_;
  std::vector<Edge> edges_;
};

/// Edge indices (e₁, …, eₙ) in traversal order: r(eᵢ) = s(eᵢ₊₁) and
/// r(eₙ) = s(e₁). The base point is s(e₁).
using Cycle = std::vector<std::size_t>;

/// Holds iff every vertex receives an edge (finite graphs are row-finite).
Verdict check_regularity(const Graph& graph);

/// v ↦ r(s⁻¹(v)).
MultiMap dual_map(const Graph& graph);

/// E = (M, M, σ, id): edge t runs from σ(t) to t. `sigma[t]` is σ(t).
/// DomainError if σ is not total on M.
Graph from_map(PointSetPtr points, std::span<const std::size_t> sigma);

/// Holds iff σ is surjective, i.e. every fibre σ⁻¹(t) is nonempty so the
/// transfer operator is defined. Fails carries a point outside σ(M).
Verdict check_surjective_map(const PointSet& points, std::span<const std::size_t> sigma);

/// Shortest cycle at the least vertex lying on any cycle; none for acyclic graphs.
std::optional<Cycle> find_cycle(const Graph& graph);

bool is_cycle(const Graph& graph, const Cycle& cycle);
/// A cycle is without entries when each of its vertices receives only the
/// cycle's own edge.
bool is_cycle_without_entries(const Graph& graph, const Cycle& cycle);

/// Holds iff the graph has no cycles. The answer is cross-checked against
/// the periodic points of the dual map up to period |E⁰|.
Verdict is_aperiodic(const Graph& graph);

/// Holds iff every cycle has an entry. Fails carries an entry-less cycle.
Verdict is_topologically_free(const Graph& graph);

/// All V ⊆ E⁰ with X(V) = V, by direct evaluation of the dual map.
std::vector<Subset> invariant_sets_by_dual(const Graph& graph,
                                           std::size_t bound = default_enumeration_bound);
/// All V ⊆ E⁰ with s(e) ∈ V ⟹ r(e) ∈ V and every v ∈ V receiving an edge from V.
std::vector<Subset> invariant_sets_by_edges(const Graph& graph,
                                            std::size_t bound = default_enumeration_bound);
/// Both computations, asserted equal. BoundError when |E⁰| > bound.
std::vector<Subset> invariant_sets(const Graph& graph, std::size_t bound = default_enumeration_bound);

bool is_invariant_set(const Graph& graph, const Subset& v);

/// Holds iff the only invariant sets are ∅ and E⁰.
Verdict is_minimal(const Graph& graph, std::size_t bound = default_enumeration_bound);

/// L(a)(t) = |σ⁻¹(t)|⁻¹ Σ_{s∈σ⁻¹(t)} a(s), exactly. DomainError if σ is not
/// surjective or the sizes disagree.
std::vector<Rational> transfer_operator(std::span<const std::size_t> sigma, std::span<const Rational> a);

struct SimplicityReport {
  Verdict regularity;
  Verdict aperiodicity;
  Verdict topological_freeness;
  Verdict minimality;
  /// Hypotheses with a Fails verdict, in the order regularity, aperiodicity, minimality.
  std::vector<std::string> unmet;
  std::string conclusion;
};

/// Combines the checks. Never claims non-simplicity: the criterion is
/// sufficient only.
SimplicityReport simplicity_report(const Graph& graph, std::size_t bound = default_enumeration_bound);

Json cycle_to_json(const Graph& graph, const Cycle& cycle);
Json subset_to_json(const PointSet& points, const Subset& subset);

}  // namespace ore
