#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ore/graph.hpp"
#include "ore/semigroup.hpp"
#include "ore/verdict.hpp"

namespace ore {

/// Exponents of a degree over the generator list of a PGraph.
using Exponents = std::vector<std::int64_t>;

/// Composition-order edge sequence λ = e₁e₂⋯eₙ with s(eᵢ) = r(eᵢ₊₁), as
/// global edge indices. The empty sequence is a vertex.
using EdgePath = std::vector<std::size_t>;

/// One commuting square: the pair `canonical` = (x, y), with the generator of
/// x listed before the generator of y, is identified with the pair
/// `swapped` = (y', x').
struct Square {
  std::size_t canonical_first;
  std::size_t canonical_second;
  std::size_t swapped_first;
  std::size_t swapped_second;
};

/// A path together with its endpoints, so that vertices (empty edge
/// sequences) keep their identity.
struct DegreePath {
  EdgePath edges;
  std::size_t src;
  std::size_t rng;

  bool operator==(const DegreePath&) const = default;
};

struct GeneratorEdge {
  std::string id;
  std::size_t generator;
  std::size_t src;
  std::size_t rng;
};

/// Default cap on the number of paths a fiber graph may hold.
inline constexpr std::size_t default_path_bound = 100000;

/// A finite discrete P-graph over NatAdd(k), k ≤ 3, or over the submonoid of
/// NatMult generated by the listed primes, presented by generator fibers and
/// square data. Normal forms list generators in ascending order.
class PGraph {
 public:
  /// Throws FormatError for unsupported semigroups, non-generator degrees,
  /// duplicate edge ids and squares whose pairs do not have the shape of a
  /// square between two distinct generators.
  PGraph(OreSemigroup semigroup, PointSetPtr vertices, std::vector<Element> generators,
         std::vector<GeneratorEdge> edges, std::vector<Square> squares);

  const OreSemigroup& semigroup() const noexcept { return semigroup_; }
  const PointSet& vertices() const noexcept { return *vertices_; }
  const PointSetPtr& vertices_ptr() const noexcept { return vertices_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<GeneratorEdge>& edges() const noexcept { return edges_; }
  const std::vector<Square>& squares() const noexcept { return squares_; }
  std::optional<std::size_t> find_edge(const std::string& id) const;

  /// DomainError if p lies outside the submonoid generated by the generators.
  Exponents exponents(const Element& p) const;
  Element element(const Exponents& d) const;
  std::string format_degree(const Exponents& d) const;

  /// The single-generator fiber, as a Graph on Λᵉ.
  Graph generator_fiber(std::size_t generator) const;

  /// Rewrites a composable sequence into normal form by repeatedly replacing
  /// the leftmost out-of-order adjacent pair through the square data. None
  /// if a needed square is missing.
  std::optional<EdgePath> normal_form(EdgePath path) const;

  /// The first square whose swapped side is (first, second), if any.
  std::optional<std::pair<std::size_t, std::size_t>> swap(std::size_t first, std::size_t second) const;

  bool composable(const EdgePath& path) const;
  Exponents degree_of(const EdgePath& path) const;
  /// Edge ids joined with '.'; the vertex label for a vertex.
  std::string path_id(const DegreePath& path) const;
  Json path_to_json(const EdgePath& path) const;
  /// Composable sequence of degree d from `src` to `rng` in normal form.
  std::optional<EdgePath> find_path(const Exponents& d, std::size_t src, std::size_t rng) const;

 private:
  OreSemigroup semigroup_;
  PointSetPtr vertices_;
  std::vector<Element> generators_;
  std::vector<GeneratorEdge> edges_;
  std::vector<Square> squares_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> swap_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
};

enum class PGraphDefect { composability, preservation, bijectivity, cube };

std::string_view to_string(PGraphDefect defect);

struct PGraphViolation {
  PGraphDefect defect;
  std::string message;
  Json witness;
};

struct PGraphReport {
  std::vector<PGraphViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks that every square pair is composable, that squares preserve the
/// outer source and range, that each generator pair's square data is a
/// bijection (orphaned or repeated pairs are reported), and for three or more
/// generators that every rewriting route of a composable triple agrees.
PGraphReport verify_pgraph(const PGraph& pgraph);

/// All degree-d paths in normal form, as a Graph whose edges are paths.
/// d = e gives one edge per vertex, named after the vertex, with s = r = id.
/// BoundError beyond `path_bound` paths.
Graph fiber_graph(const PGraph& pgraph, const Exponents& d, std::size_t path_bound = default_path_bound);
std::vector<DegreePath> paths_of_degree(const PGraph& pgraph, const Exponents& d,
                                      std::size_t path_bound = default_path_bound);

MultiMap dual_at(const PGraph& pgraph, const Exponents& d, std::size_t path_bound = default_path_bound);

/// Holds iff dual_at(p) ∘ dual_at(q) = dual_at(p + q) as relations and the
/// factorization map (μ, ν) ↦ normal form of μν is defined, preserves s and r,
/// and is a bijection onto Λ^{p+q}. Fails carries a vertex and the offending
/// pair.
Verdict check_semigroup_law(const PGraph& pgraph, const Exponents& p, const Exponents& q,
                            std::size_t path_bound = default_path_bound);

/// Law checks over all p, q with entries at most `coordinate_bound`; the
/// first failing check, or Holds.
Verdict check_semigroup_law_box(const PGraph& pgraph, std::int64_t coordinate_bound = 1,
                                std::size_t path_bound = default_path_bound);

struct AperiodicityOptions {
  /// Per-generator upper bound of the degree box; empty means 4 everywhere.
  Exponents box;
  std::size_t f_max = 3;
  /// Skip the exact NatAdd(1) reduction and run the bounded search.
  bool force_search = false;
};

/// Bounded search for a refutation (v, q, F) of aperiodicity with U = {v}.
/// Fails with a witness when some (v, q, F) defeats every ordering of F along
/// the canonical join chain; Holds only for NatAdd(1) without cycles;
/// Unknown(bound) otherwise.
Verdict check_aperiodicity(const PGraph& pgraph, const AperiodicityOptions& options = {});

/// Re-exhibits the path pairs of an aperiodicity witness and checks them
/// against the graph.
bool validate_aperiodicity_witness(const PGraph& pgraph, const Json& witness);

/// Holds iff every generator fiber is regular; Fails names the degree and vertex.
Verdict check_regularity(const PGraph& pgraph);

/// All V with r(Λᵖ ∩ s⁻¹(V)) = V for every generator p, cross-checked on
/// every degree with entries ≤ 1. DomainError if the semigroup law fails.
std::vector<Subset> invariant_sets_p(const PGraph& pgraph, std::size_t bound = default_enumeration_bound);

Verdict is_minimal(const PGraph& pgraph, std::size_t bound = default_enumeration_bound);

struct PSimplicityReport {
  Verdict factorization;
  std::optional<Verdict> regularity;
  std::optional<Verdict> aperiodicity;
  std::optional<Verdict> minimality;
  std::vector<std::string> unmet;
  std::string conclusion;
};

PSimplicityReport simplicity_report_p(const PGraph& pgraph, const AperiodicityOptions& options = {},
                                      std::size_t bound = default_enumeration_bound);

}  // namespace ore
