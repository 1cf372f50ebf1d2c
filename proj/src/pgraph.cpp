#include "ore/pgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ore/errors.hpp"

namespace ore {

namespace {

constexpr const char* kLawRule = "pgraph:semigroup-law (dual of a product is the composite of duals)";
constexpr const char* kAperiodicityRule = "pgraph:aperiodicity (refutation search over v, q, F with join chain)";
constexpr const char* kRegularityRule = "pgraph:regularity (every vertex receives an edge of each generator)";
constexpr const char* kMinimalityRule = "pgraph:minimality (only trivial V with r(path^p from V)=V)";
constexpr const char* kFactorizationRule = "pgraph:factorization (square data is a consistent bijection)";

constexpr std::size_t kHardMaskLimit = 62;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Exponents join(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool is_zero(const Exponents& d) {
  return std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 0; });
}

// All exponent vectors with 0 ≤ dᵢ ≤ box[i], first coordinate most significant.
std::vector<Exponents> box_degrees(const Exponents& box) {
  std::vector<Exponents> out;
  Exponents d(box.size(), 0);
  while (true) {
    out.push_back(d);
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      if (d[i] < box[i]) {
        ++d[i];
        break;
      }
      d[i] = 0;
      if (i == 0) return out;
    }
    if (box.empty()) return out;
  }
}

// Generator slots of the normal form of d, in composition order.
std::vector<std::size_t> slots(const Exponents& d) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < d.size(); ++g) {
    for (std::int64_t t = 0; t < d[g]; ++t) out.push_back(g);
  }
  return out;
}

Subset mask_to_subset(std::uint64_t mask) {
  Subset out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

PGraph::PGraph(OreSemigroup semigroup, PointSetPtr vertices, std::vector<Element> generators,
               std::vector<GeneratorEdge> edges, std::vector<Square> squares)
    : semigroup_(std::move(semigroup)),
      vertices_(std::move(vertices)),
      generators_(std::move(generators)),
      edges_(std::move(edges)),
      squares_(std::move(squares)) {
  if (!vertices_) throw FormatError("missing vertex set", "vertices");
  switch (semigroup_.family()) {
    case Family::finite_group:
      throw FormatError("P-graphs over finite groups are not supported", "semigroup");
    case Family::nat_add: {
      const auto k = semigroup_.rank();
      if (k == 0 || k > 3) throw FormatError("k-graphs are supported for 1 <= k <= 3", "semigroup");
      if (generators_.size() != k) throw FormatError("expected the " + std::to_string(k) + " unit degrees", "fibers");
      for (std::size_t i = 0; i < k; ++i) {
        Exponents unit(k, 0);
        unit[i] = 1;
        if (generators_[i].value != unit) throw FormatError("degrees must be the unit vectors in order", "fibers");
      }
      break;
    }
    case Family::nat_mult:
      if (generators_.empty()) throw FormatError("at least one prime degree is required", "fibers");
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].value.size() != 1 || !is_prime(generators_[i].value[0])) {
          throw FormatError("fiber degrees over natmult must be primes", "fibers");
        }
        if (i > 0 && generators_[i - 1].value[0] >= generators_[i].value[0]) {
          throw FormatError("prime degrees must be listed in ascending order", "fibers");
        }
      }
      break;
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.id.empty() || e.id.find('.') != std::string::npos) {
      throw FormatError("edge id '" + e.id + "' must be nonempty and free of '.'", "fibers");
    }
    if (e.generator >= generators_.size()) throw FormatError("edge '" + e.id + "' has no generator", "fibers");
    if (e.src >= vertices_->size() || e.rng >= vertices_->size()) {
      throw FormatError("edge '" + e.id + "' has an endpoint outside the vertex set", "fibers");
    }
    if (!edge_index_.emplace(e.id, i).second) throw FormatError("duplicate edge id '" + e.id + "'", "fibers");
  }

  for (std::size_t i = 0; i < squares_.size(); ++i) {
    const auto& sq = squares_[i];
    for (auto x : {sq.canonical_first, sq.canonical_second, sq.swapped_first, sq.swapped_second}) {
      if (x >= edges_.size()) throw FormatError("square " + std::to_string(i) + " names an unknown edge", "squares");
    }
    const auto a = edges_[sq.canonical_first].generator;
    const auto b = edges_[sq.canonical_second].generator;
    if (a >= b || edges_[sq.swapped_first].generator != b || edges_[sq.swapped_second].generator != a) {
      throw FormatError("square " + std::to_string(i) + " does not pair two distinct generators crosswise",
                        "squares");
    }
    swap_index_.emplace(std::pair{sq.swapped_first, sq.swapped_second}, i);
  }
}

std::optional<std::size_t> PGraph::find_edge(const std::string& id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Exponents PGraph::exponents(const Element& p) const {
  semigroup_.require_valid(p);
  if (semigroup_.family() == Family::nat_add) return p.value;
  auto n = p.value[0];
  Exponents out(generators_.size(), 0);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto prime = generators_[g].value[0];
    while (n % prime == 0) {
      n /= prime;
      ++out[g];
    }
  }
  if (n != 1) throw DomainError(semigroup_.format_element(p) + " is not generated by the fiber degrees");
  return out;
}

Element PGraph::element(const Exponents& d) const {
  if (d.size() != generators_.size()) throw DomainError("degree has the wrong number of coordinates");
  if (semigroup_.family() == Family::nat_add) return Element{d};
  Element out = semigroup_.identity();
  for (std::size_t g = 0; g < d.size(); ++g) {
    for (std::int64_t t = 0; t < d[g]; ++t) out = semigroup_.multiply(out, generators_[g]);
  }
  return out;
}

std::string PGraph::format_degree(const Exponents& d) const { return semigroup_.format_element(element(d)); }

Graph PGraph::generator_fiber(std::size_t generator) const {
  std::vector<Edge> fiber;
  for (const auto& e : edges_) {
    if (e.generator == generator) fiber.push_back({e.id, e.src, e.rng});
  }
  return Graph(vertices_, std::move(fiber));
}

std::optional<std::pair<std::size_t, std::size_t>> PGraph::swap(std::size_t first, std::size_t second) const {
  const auto it = swap_index_.find({first, second});
  if (it == swap_index_.end()) return std::nullopt;
  const auto& sq = squares_[it->second];
  return std::pair{sq.canonical_first, sq.canonical_second};
}

std::optional<EdgePath> PGraph::normal_form(EdgePath path) const {
  while (true) {
    std::size_t t = 0;
    while (t + 1 < path.size() && edges_[path[t]].generator <= edges_[path[t + 1]].generator) ++t;
    if (t + 1 >= path.size()) return path;
    const auto replaced = swap(path[t], path[t + 1]);
    if (!replaced) return std::nullopt;
    path[t] = replaced->first;
    path[t + 1] = replaced->second;
  }
}

bool PGraph::composable(const EdgePath& path) const {
  for (auto e : path) {
    if (e >= edges_.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (edges_[path[i]].src != edges_[path[i + 1]].rng) return false;
  }
  return true;
}

Exponents PGraph::degree_of(const EdgePath& path) const {
  Exponents d(generators_.size(), 0);
  for (auto e : path) ++d[edges_.at(e).generator];
  return d;
}

std::string PGraph::path_id(const DegreePath& path) const {
  if (path.edges.empty()) return vertices_->label(path.rng);
  std::string id;
  for (auto e : path.edges) {
    if (!id.empty()) id += '.';
    id += edges_[e].id;
  }
  return id;
}

Json PGraph::path_to_json(const EdgePath& path) const {
  Json ids = Json::array();
  for (auto e : path) ids.push_back(edges_.at(e).id);
  return ids;
}

std::optional<EdgePath> PGraph::find_path(const Exponents& d, std::size_t src, std::size_t rng) const {
  const auto slot = slots(d);
  if (slot.empty()) {
    if (src == rng) return EdgePath{};
    return std::nullopt;
  }
  const auto n = vertices_->size();
  // dead[pos * n + v]: no completion exists from slot pos when the next edge must end at v.
  std::vector<char> dead(slot.size() * n, 0);
  EdgePath path;
  auto search = [&](auto&& self, std::size_t pos, std::size_t need) -> bool {
    if (pos == slot.size()) return need == src;
    if (dead[pos * n + need]) return false;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].generator != slot[pos] || edges_[e].rng != need) continue;
      path.push_back(e);
      if (self(self, pos + 1, edges_[e].src)) return true;
      path.pop_back();
    }
    dead[pos * n + need] = 1;
    return false;
  };
  if (search(search, 0, rng)) return path;
  return std::nullopt;
}

std::string_view to_string(PGraphDefect defect) {
  switch (defect) {
    case PGraphDefect::composability:
      return "composability";
    case PGraphDefect::preservation:
      return "preservation";
    case PGraphDefect::bijectivity:
      return "bijectivity";
    case PGraphDefect::cube:
      return "cube";
  }
  return "";
}

PGraphReport verify_pgraph(const PGraph& pg) {
  PGraphReport report;
  const auto& edges = pg.edges();
  const auto pair_json = [&](std::size_t a, std::size_t b) { return Json::array({edges[a].id, edges[b].id}); };

  for (std::size_t i = 0; i < pg.squares().size(); ++i) {
    const auto& sq = pg.squares()[i];
    const bool canon_ok = edges[sq.canonical_first].src == edges[sq.canonical_second].rng;
    const bool swapped_ok = edges[sq.swapped_first].src == edges[sq.swapped_second].rng;
    if (!canon_ok || !swapped_ok) {
      const auto bad = canon_ok ? pair_json(sq.swapped_first, sq.swapped_second)
                                : pair_json(sq.canonical_first, sq.canonical_second);
      report.violations.push_back({PGraphDefect::composability, "square pair is not composable",
                                   Json{{"square", i}, {"pair", bad}}});
      continue;
    }
    if (edges[sq.canonical_first].rng != edges[sq.swapped_first].rng ||
        edges[sq.canonical_second].src != edges[sq.swapped_second].src) {
      report.violations.push_back(
          {PGraphDefect::preservation, "square changes the outer source or range",
           Json{{"square", i},
                {"pair", pair_json(sq.swapped_first, sq.swapped_second)},
                {"image", pair_json(sq.canonical_first, sq.canonical_second)}}});
    }
  }

  const auto rank = pg.rank();
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = a + 1; b < rank; ++b) {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> canonical_uses;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> swapped_uses;
      for (const auto& sq : pg.squares()) {
        if (edges[sq.canonical_first].generator != a || edges[sq.canonical_second].generator != b) continue;
        ++canonical_uses[{sq.canonical_first, sq.canonical_second}];
        ++swapped_uses[{sq.swapped_first, sq.swapped_second}];
      }
      // Composable pairs of each shape, in edge-index order.
      for (int side = 0; side < 2; ++side) {
        const auto first_gen = side == 0 ? a : b;
        const auto second_gen = side == 0 ? b : a;
        const auto& uses = side == 0 ? canonical_uses : swapped_uses;
        for (std::size_t x = 0; x < edges.size(); ++x) {
          if (edges[x].generator != first_gen) continue;
          for (std::size_t y = 0; y < edges.size(); ++y) {
            if (edges[y].generator != second_gen || edges[x].src != edges[y].rng) continue;
            const auto it = uses.find({x, y});
            const auto count = it == uses.end() ? 0 : it->second;
            if (count == 0) {
              report.violations.push_back({PGraphDefect::bijectivity, "composable pair covered by no square",
                                           Json{{"orphan", pair_json(x, y)}}});
            } else if (count > 1) {
              report.violations.push_back({PGraphDefect::bijectivity, "composable pair used by several squares",
                                           Json{{"repeated", pair_json(x, y)}}});
            }
          }
        }
      }
    }
  }

  if (rank >= 3) {
    std::vector<std::vector<std::size_t>> by_range(pg.vertices().size());
    for (std::size_t e = 0; e < edges.size(); ++e) by_range[edges[e].rng].push_back(e);
    for (std::size_t x = 0; x < edges.size(); ++x) {
      for (auto y : by_range[edges[x].src]) {
        for (auto z : by_range[edges[y].src]) {
          const auto gx = edges[x].generator;
          const auto gy = edges[y].generator;
          const auto gz = edges[z].generator;
          if (gx == gy || gy == gz || gx == gz) continue;
          std::set<EdgePath> results;
          std::set<EdgePath> seen;
          std::vector<EdgePath> stack{{x, y, z}};
          while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            if (!seen.insert(cur).second) continue;
            bool terminal = true;
            for (std::size_t t = 0; t + 1 < cur.size(); ++t) {
              if (edges[cur[t]].generator <= edges[cur[t + 1]].generator) continue;
              terminal = false;
              if (const auto sw = pg.swap(cur[t], cur[t + 1])) {
                auto next = cur;
                next[t] = sw->first;
                next[t + 1] = sw->second;
                stack.push_back(std::move(next));
              }
            }
            if (terminal) results.insert(cur);
          }
          if (results.size() > 1) {
            Json routes = Json::array();
            for (const auto& r : results) routes.push_back(pg.path_to_json(r));
            report.violations.push_back({PGraphDefect::cube, "rewriting routes of a triple disagree",
                                         Json{{"triple", pg.path_to_json({x, y, z})}, {"results", routes}}});
          }
        }
      }
    }
  }
  return report;
}

std::vector<DegreePath> paths_of_degree(const PGraph& pg, const Exponents& d, std::size_t path_bound) {
  if (d.size() != pg.rank()) throw DomainError("degree has the wrong number of coordinates");
  std::vector<DegreePath> out;
  const auto slot = slots(d);
  if (slot.empty()) {
    for (std::size_t v = 0; v < pg.vertices().size(); ++v) out.push_back({{}, v, v});
    return out;
  }
  std::vector<std::vector<std::size_t>> by_gen(pg.rank());
  for (std::size_t e = 0; e < pg.edges().size(); ++e) by_gen[pg.edges()[e].generator].push_back(e);
  EdgePath path;
  auto extend = [&](auto&& self, std::size_t pos) -> void {
    if (pos == slot.size()) {
      if (out.size() >= path_bound) {
        throw BoundError("more than " + std::to_string(path_bound) + " paths of degree " + pg.format_degree(d));
      }
      out.push_back({path, pg.edges()[path.back()].src, pg.edges()[path.front()].rng});
      return;
    }
    for (auto e : by_gen[slot[pos]]) {
      if (pos > 0 && pg.edges()[e].rng != pg.edges()[path.back()].src) continue;
      path.push_back(e);
      self(self, pos + 1);
      path.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

Graph fiber_graph(const PGraph& pg, const Exponents& d, std::size_t path_bound) {
  std::vector<Edge> edges;
  for (const auto& p : paths_of_degree(pg, d, path_bound)) edges.push_back({pg.path_id(p), p.src, p.rng});
  return Graph(pg.vertices_ptr(), std::move(edges));
}

MultiMap dual_at(const PGraph& pg, const Exponents& d, std::size_t path_bound) {
  return dual_map(fiber_graph(pg, d, path_bound));
}

Verdict check_semigroup_law(const PGraph& pg, const Exponents& p, const Exponents& q, std::size_t path_bound) {
  const auto pq = add(p, q);
  const auto& labels = pg.vertices();
  Json base{{"p", pg.format_degree(p)}, {"q", pg.format_degree(q)}};
  const auto fail = [&](std::size_t v, Json extra, const std::string& note) {
    Json w = base;
    w["vertex"] = labels.label(v);
    for (auto& [k, val] : extra.items()) w[k] = val;
    return Verdict::fails(kLawRule, std::move(w), note);
  };

  const auto left = compose(dual_at(pg, p, path_bound), dual_at(pg, q, path_bound));
  const auto right = dual_at(pg, pq, path_bound);
  if (!(left == right)) {
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (left.at(v) != right.at(v)) return fail(v, Json::object(), "the relations differ at this vertex");
    }
  }

  const auto mus = paths_of_degree(pg, p, path_bound);
  const auto nus = paths_of_degree(pg, q, path_bound);
  std::map<EdgePath, std::pair<std::string, std::string>> hit;
  std::size_t pairs = 0;
  for (const auto& mu : mus) {
    for (const auto& nu : nus) {
      if (mu.src != nu.rng) continue;
      ++pairs;
      EdgePath joined = mu.edges;
      joined.insert(joined.end(), nu.edges.begin(), nu.edges.end());
      const Json pair = Json::array({pg.path_id(mu), pg.path_id(nu)});
      const auto nf = pg.normal_form(joined);
      if (!nf) return fail(mu.rng, Json{{"pair", pair}}, "no square rewrites this pair");
      if (!nf->empty() && (!pg.composable(*nf) || pg.edges()[nf->front()].rng != mu.rng ||
                           pg.edges()[nf->back()].src != nu.src)) {
        return fail(mu.rng, Json{{"pair", pair}}, "rewriting breaks composability or the outer endpoints");
      }
      const auto [it, fresh] = hit.emplace(*nf, std::pair{pair[0].get<std::string>(), pair[1].get<std::string>()});
      if (!fresh && !nf->empty()) {
        return fail(mu.rng,
                    Json{{"pair", pair}, {"collides_with", Json::array({it->second.first, it->second.second})}},
                    "two pairs factor to the same path");
      }
    }
  }
  const auto products = paths_of_degree(pg, pq, path_bound);
  if (pairs != products.size()) {
    for (const auto& lam : products) {
      if (!hit.count(lam.edges)) {
        return fail(lam.rng, Json{{"path", pg.path_id(lam)}}, "no pair factors to this path");
      }
    }
  }
  return Verdict::holds(kLawRule, "relations agree and factorization is a bijection onto " +
                                      std::to_string(products.size()) + " path(s)");
}

Verdict check_semigroup_law_box(const PGraph& pg, std::int64_t coordinate_bound, std::size_t path_bound) {
  const auto degrees = box_degrees(Exponents(pg.rank(), coordinate_bound));
  for (const auto& p : degrees) {
    for (const auto& q : degrees) {
      auto v = check_semigroup_law(pg, p, q, path_bound);
      if (v.is_fails()) return v;
    }
  }
  return Verdict::holds(kLawRule, "all degree pairs with entries <= " + std::to_string(coordinate_bound));
}

namespace {

// Relations and coincidence masks shared across the aperiodicity search.
class Relations {
 public:
  explicit Relations(const PGraph& pg) : pg_(pg) {
    for (std::size_t g = 0; g < pg.rank(); ++g) generator_duals_.push_back(dual_map(pg.generator_fiber(g)));
  }

  const MultiMap& relation(const Exponents& d) {
    auto it = relations_.find(d);
    if (it != relations_.end()) return it->second;
    MultiMap f = MultiMap::identity(pg_.vertices_ptr());
    for (std::size_t g = d.size(); g-- > 0;) {
      for (std::int64_t t = 0; t < d[g]; ++t) f = compose(generator_duals_[g], f);
    }
    return relations_.emplace(d, std::move(f)).first->second;
  }

  // Vertices v with some u such that paths of degrees a and b both run from u to v.
  const std::vector<char>& coincidence(const Exponents& a, const Exponents& b) {
    const auto key = std::pair{a, b};
    auto it = coincidences_.find(key);
    if (it != coincidences_.end()) return it->second;
    const auto& ra = relation(a);
    const auto& rb = relation(b);
    std::vector<char> mask(pg_.vertices().size(), 0);
    for (std::size_t u = 0; u < mask.size(); ++u) {
      const auto ya = ra.at(u);
      const auto yb = rb.at(u);
      std::vector<std::size_t> both;
      std::set_intersection(ya.begin(), ya.end(), yb.begin(), yb.end(), std::back_inserter(both));
      for (auto v : both) mask[v] = 1;
    }
    return coincidences_.emplace(key, std::move(mask)).first->second;
  }

  std::optional<std::size_t> common_source(const Exponents& a, const Exponents& b, std::size_t v) {
    const auto& ra = relation(a);
    const auto& rb = relation(b);
    for (std::size_t u = 0; u < pg_.vertices().size(); ++u) {
      if (ra.contains(u, v) && rb.contains(u, v)) return u;
    }
    return std::nullopt;
  }

 private:
  const PGraph& pg_;
  std::vector<MultiMap> generator_duals_;
  std::map<Exponents, MultiMap> relations_;
  std::map<std::pair<Exponents, Exponents>, std::vector<char>> coincidences_;
};

struct ChainStep {
  Exponents s;
  Exponents a;
  Exponents b;
};

std::vector<ChainStep> join_chain(const Exponents& q, const std::vector<Exponents>& order) {
  std::vector<ChainStep> chain;
  Exponents s = q;
  for (const auto& p : order) {
    s = join(p, s);
    chain.push_back({s, sub(s, p), sub(s, q)});
  }
  return chain;
}

// Index of the first chain step whose coincidence set contains v, if any.
std::optional<std::size_t> covering_step(Relations& rel, const std::vector<ChainStep>& chain, std::size_t v) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (rel.coincidence(chain[i].a, chain[i].b)[v]) return i;
  }
  return std::nullopt;
}

bool defeats_every_order(Relations& rel, std::size_t v, const Exponents& q, std::vector<Exponents> f) {
  std::sort(f.begin(), f.end());
  do {
    if (!covering_step(rel, join_chain(q, f), v)) return false;
  } while (std::next_permutation(f.begin(), f.end()));
  return true;
}

Json build_witness(const PGraph& pg, Relations& rel, std::size_t v, const Exponents& q, std::vector<Exponents> f) {
  std::sort(f.begin(), f.end());
  Json fj = Json::array();
  for (const auto& p : f) fj.push_back(pg.format_degree(p));
  Json enumerations = Json::array();
  do {
    const auto chain = join_chain(q, f);
    const auto i = *covering_step(rel, chain, v);
    const auto u = *rel.common_source(chain[i].a, chain[i].b, v);
    const auto mu = pg.find_path(chain[i].a, u, v);
    const auto nu = pg.find_path(chain[i].b, u, v);
    if (!mu || !nu) throw std::logic_error("relation reports a path that the path search cannot find");
    Json order = Json::array();
    Json steps = Json::array();
    for (const auto& p : f) order.push_back(pg.format_degree(p));
    for (const auto& st : chain) steps.push_back(pg.format_degree(st.s));
    enumerations.push_back(Json{{"order", order},
                                {"chain", steps},
                                {"index", i + 1},
                                {"mu", pg.path_to_json(*mu)},
                                {"nu", pg.path_to_json(*nu)}});
  } while (std::next_permutation(f.begin(), f.end()));
  return Json{{"vertex", pg.vertices().label(v)}, {"q", pg.format_degree(q)}, {"F", fj}, {"enumerations", enumerations}};
}

bool regular_fibers(const PGraph& pg) {
  for (std::size_t g = 0; g < pg.rank(); ++g) {
    if (check_regularity(pg.generator_fiber(g)).is_fails()) return false;
  }
  return true;
}

}  // namespace

Verdict check_aperiodicity(const PGraph& pg, const AperiodicityOptions& options) {
  Exponents box = options.box.empty() ? Exponents(pg.rank(), 4) : options.box;
  if (box.size() != pg.rank()) throw DomainError("box needs one bound per generator");
  if (std::any_of(box.begin(), box.end(), [](std::int64_t b) { return b < 0; })) {
    throw DomainError("box bounds must be nonnegative");
  }
  if (options.f_max == 0) throw DomainError("F_max must be positive");

  Relations rel(pg);
  Verdict verdict;
  const bool exact = pg.semigroup().family() == Family::nat_add && pg.rank() == 1 && !options.force_search;
  if (exact) {
    const auto skeleton = pg.generator_fiber(0);
    const auto cycle = find_cycle(skeleton);
    if (!cycle) {
      verdict = Verdict::holds(kAperiodicityRule, "rank one: aperiodic exactly when the skeleton has no cycles");
    } else {
      const auto v = skeleton.edges()[cycle->front()].src;
      const Exponents length{static_cast<std::int64_t>(cycle->size())};
      verdict = Verdict::fails(kAperiodicityRule, build_witness(pg, rel, v, Exponents{0}, {length}),
                               "rank one: the skeleton has a cycle at this vertex");
    }
  } else {
    const auto degrees = box_degrees(box);
    std::optional<Json> witness;
    for (std::size_t v = 0; v < pg.vertices().size() && !witness; ++v) {
      for (std::size_t qi = 0; qi < degrees.size() && !witness; ++qi) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
          if (i != qi) rest.push_back(i);
        }
        for (std::size_t size = 1; size <= options.f_max && size <= rest.size() && !witness; ++size) {
          std::vector<std::size_t> pick(size);
          for (std::size_t i = 0; i < size; ++i) pick[i] = i;
          while (true) {
            std::vector<Exponents> f;
            for (auto i : pick) f.push_back(degrees[rest[i]]);
            if (defeats_every_order(rel, v, degrees[qi], f)) {
              witness = build_witness(pg, rel, v, degrees[qi], std::move(f));
              break;
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == rest.size() - size + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
          }
        }
      }
    }
    std::string box_text;
    for (auto b : box) box_text += (box_text.empty() ? "" : ",") + std::to_string(b);
    if (witness) {
      verdict = Verdict::fails(kAperiodicityRule, std::move(*witness),
                               "every ordering of F is covered at this vertex");
    } else {
      verdict = Verdict::unknown(kAperiodicityRule, *std::max_element(box.begin(), box.end()),
                                 "no refutation in box (" + box_text + ") with |F| <= " +
                                     std::to_string(options.f_max) +
                                     "; the condition ranges over all finite F, so a bounded search cannot confirm it");
    }
  }
  if (!regular_fibers(pg)) {
    verdict.caveats.emplace_back("some generator fiber is not regular: the verdict is combinatorial only");
  }
  return verdict;
}

bool validate_aperiodicity_witness(const PGraph& pg, const Json& w) {
  try {
    const auto v = pg.vertices().index_of(w.at("vertex").get<std::string>());
    const auto q = pg.exponents(pg.semigroup().parse_element(w.at("q").get<std::string>()));
    std::vector<Exponents> f;
    for (const auto& p : w.at("F")) f.push_back(pg.exponents(pg.semigroup().parse_element(p.get<std::string>())));
    if (f.empty()) return false;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
    if (std::find(f.begin(), f.end(), q) != f.end()) return false;

    std::set<std::vector<Exponents>> orders;
    for (const auto& en : w.at("enumerations")) {
      std::vector<Exponents> order;
      for (const auto& p : en.at("order")) {
        order.push_back(pg.exponents(pg.semigroup().parse_element(p.get<std::string>())));
      }
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != f || !orders.insert(order).second) return false;

      const auto chain = join_chain(q, order);
      const auto& steps = en.at("chain");
      if (steps.size() != chain.size()) return false;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (pg.exponents(pg.semigroup().parse_element(steps[i].get<std::string>())) != chain[i].s) return false;
      }
      const auto index = en.at("index").get<std::size_t>();
      if (index == 0 || index > chain.size()) return false;
      const auto& step = chain[index - 1];

      const auto read_path = [&](const Json& ids) {
        EdgePath path;
        for (const auto& id : ids) {
          const auto e = pg.find_edge(id.get<std::string>());
          if (!e) throw FormatError("unknown edge");
          path.push_back(*e);
        }
        return path;
      };
      const auto mu = read_path(en.at("mu"));
      const auto nu = read_path(en.at("nu"));
      if (!pg.composable(mu) || !pg.composable(nu)) return false;
      if (pg.degree_of(mu) != step.a || pg.degree_of(nu) != step.b) return false;
      const auto src = [&](const EdgePath& p) { return p.empty() ? v : pg.edges()[p.back()].src; };
      const auto rng = [&](const EdgePath& p) { return p.empty() ? v : pg.edges()[p.front()].rng; };
      if (src(mu) != src(nu) || rng(mu) != v || rng(nu) != v) return false;
    }
    std::size_t permutations = 1;
    for (std::size_t i = 2; i <= f.size(); ++i) permutations *= i;
    return orders.size() == permutations;
  } catch (const std::exception&) {
    return false;
  }
}

Verdict check_regularity(const PGraph& pg) {
  for (std::size_t g = 0; g < pg.rank(); ++g) {
    const auto fiber = pg.generator_fiber(g);
    const auto v = check_regularity(fiber);
    if (v.is_fails()) {
      Exponents d(pg.rank(), 0);
      d[g] = 1;
      return Verdict::fails(kRegularityRule,
                            Json{{"degree", pg.format_degree(d)}, {"vertex", v.witness.at("vertex")}},
                            "this vertex receives no edge of the given degree");
    }
  }
  return Verdict::holds(kRegularityRule);
}

std::vector<Subset> invariant_sets_p(const PGraph& pg, std::size_t bound) {
  const auto law = check_semigroup_law_box(pg, 1);
  if (law.is_fails()) throw DomainError("semigroup law fails: factorization data inconsistent");
  const auto n = pg.vertices().size();
  if (n > bound || n > kHardMaskLimit) {
    throw BoundError("invariant-set enumeration over " + std::to_string(n) + " vertices exceeds the bound of " +
                     std::to_string(std::min(bound, kHardMaskLimit)));
  }

  const auto to_masks = [n](const MultiMap& f) {
    std::vector<std::uint64_t> out(n, 0);
    for (const auto& [x, y] : f.pairs()) out[x] |= std::uint64_t{1} << y;
    return out;
  };
  const auto image = [n](const std::vector<std::uint64_t>& f, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) out |= f[v];
    }
    return out;
  };

  std::vector<std::vector<std::uint64_t>> generators;
  for (std::size_t g = 0; g < pg.rank(); ++g) generators.push_back(to_masks(dual_map(pg.generator_fiber(g))));
  std::vector<std::vector<std::uint64_t>> small_box;
  for (const auto& d : box_degrees(Exponents(pg.rank(), 1))) {
    if (!is_zero(d)) small_box.push_back(to_masks(dual_at(pg, d)));
  }

  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const bool by_generators = std::all_of(generators.begin(), generators.end(),
                                           [&](const auto& f) { return image(f, mask) == mask; });
    const bool by_box =
        std::all_of(small_box.begin(), small_box.end(), [&](const auto& f) { return image(f, mask) == mask; });
    if (by_generators != by_box) {
      throw std::logic_error("invariance under generators and under composite degrees disagree");
    }
    if (by_generators) out.push_back(mask_to_subset(mask));
  }
  return out;
}

Verdict is_minimal(const PGraph& pg, std::size_t bound) {
  const auto sets = invariant_sets_p(pg, bound);
  for (const auto& v : sets) {
    if (!v.empty() && v.size() < pg.vertices().size()) {
      return Verdict::fails(kMinimalityRule, Json{{"invariant_set", subset_to_json(pg.vertices(), v)}},
                            "nontrivial vertex set invariant under every degree");
    }
  }
  return Verdict::holds(kMinimalityRule, std::to_string(sets.size()) + " invariant set(s), all trivial");
}

PSimplicityReport simplicity_report_p(const PGraph& pg, const AperiodicityOptions& options, std::size_t bound) {
  PSimplicityReport report{Verdict::holds(kFactorizationRule), {}, {}, {}, {}, {}};
  const auto structure = verify_pgraph(pg);
  if (!structure.ok()) {
    const auto& first = structure.violations.front();
    Json w{{"defect", to_string(first.defect)}};
    for (const auto& [k, val] : first.witness.items()) w[k] = val;
    report.factorization = Verdict::fails(kFactorizationRule, std::move(w), first.message);
  } else {
    const auto law = check_semigroup_law_box(pg, 1);
    if (law.is_fails()) {
      report.factorization = Verdict::fails(kFactorizationRule, law.witness, law.note);
    } else {
      report.factorization.note = "squares verified; semigroup law holds on degrees with entries <= 1";
    }
  }
  if (report.factorization.is_fails()) {
    report.unmet.emplace_back("factorization");
    report.conclusion = "not a P-graph: factorization data inconsistent";
    return report;
  }

  report.regularity = check_regularity(pg);
  report.aperiodicity = check_aperiodicity(pg, options);
  report.minimality = is_minimal(pg, bound);
  if (report.regularity->is_fails()) report.unmet.emplace_back("regularity");
  if (report.aperiodicity->is_fails()) report.unmet.emplace_back("aperiodicity");
  if (report.minimality->is_fails()) report.unmet.emplace_back("minimality");

  if (report.regularity->is_fails() || report.aperiodicity->is_fails()) {
    std::string list;
    for (const auto& h : report.unmet) list += (list.empty() ? "" : ", ") + h;
    report.conclusion = "hypotheses not met: " + list;
  } else if (report.aperiodicity->is_unknown()) {
    report.conclusion = "inconclusive at bound";
  } else if (report.minimality->is_holds()) {
    report.conclusion = "uniqueness theorem applies; C*_r(Lambda,d) simple";
  } else {
    report.conclusion = "uniqueness theorem applies";
  }
  return report;
}

}  // namespace ore
