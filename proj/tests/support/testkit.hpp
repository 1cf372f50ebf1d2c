#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance binary. Nothing here calls into the code under test except to
// construct values.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ore/circle.hpp"
#include "ore/graph.hpp"
#include "ore/multimap.hpp"
#include "ore/partial_action.hpp"
#include "ore/pgraph.hpp"
#include "ore/semigroup.hpp"

namespace testkit {

using ore::Subset;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(between(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline ore::Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<ore::Edge> edges;
  for (std::size_t i = 0; i < arrows.size(); ++i) edges.push_back({"e" + std::to_string(i), arrows[i].first, arrows[i].second});
  return ore::Graph(ore::make_point_set(labels(n)), std::move(edges));
}

inline ore::Graph random_graph(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t i = 0; i < m; ++i) arrows.emplace_back(rng.index(n), rng.index(n));
  return make_graph(n, arrows);
}

/// Calls `visit` once per multiset of at most `max_edges` arrows over n
/// vertices (arrows listed in non-decreasing order of their (src, rng) code).
inline void for_each_graph(std::size_t n, std::size_t max_edges, const std::function<void(const ore::Graph&)>& visit) {
  const std::size_t kinds = n * n;
  std::vector<std::size_t> codes;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (auto c : codes) arrows.emplace_back(c / n, c % n);
    visit(make_graph(n, arrows));
    if (codes.size() == max_edges) return;
    for (std::size_t c = from; c < kinds; ++c) {
      codes.push_back(c);
      extend(c);
      codes.pop_back();
    }
  };
  extend(0);
}

/// Three-colour depth-first search for a directed cycle.
inline bool has_cycle_dfs(const ore::Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : g.edges()) out[e.src].push_back(e.rng);
  std::vector<int> colour(n, 0);
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    colour[v] = 1;
    for (auto w : out[v]) {
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && visit(w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (colour[v] == 0 && visit(v)) return true;
  }
  return false;
}

using BoolMatrix = std::vector<std::vector<bool>>;

inline BoolMatrix to_matrix(const ore::MultiMap& f) {
  BoolMatrix m(f.domain_set().size(), std::vector<bool>(f.codomain_set().size(), false));
  for (const auto& [x, y] : f.pairs()) m[x][y] = true;
  return m;
}

inline BoolMatrix matrix_product(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  BoolMatrix c(a.size(), std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j]) c[i][j] = true;
      }
    }
  }
  return c;
}

inline BoolMatrix matrix_power(const BoolMatrix& a, unsigned n) {
  BoolMatrix r(a.size(), std::vector<bool>(a.size(), false));
  for (std::size_t i = 0; i < a.size(); ++i) r[i][i] = true;
  for (unsigned k = 0; k < n; ++k) r = matrix_product(a, r);
  return r;
}

/// Points x with x ∈ fⁿ(x), from the n-th power of the adjacency matrix.
inline Subset periodic_oracle(const ore::MultiMap& f, unsigned n) {
  const auto p = matrix_power(to_matrix(f), n);
  Subset out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x][x]) out.push_back(x);
  }
  return out;
}

inline ore::MultiMap random_multimap(Rng& rng, const ore::PointSetPtr& carrier, double density) {
  std::vector<ore::MultiMap::Pair> pairs;
  for (std::size_t x = 0; x < carrier->size(); ++x) {
    for (std::size_t y = 0; y < carrier->size(); ++y) {
      if (rng.coin(density)) pairs.emplace_back(x, y);
    }
  }
  return ore::MultiMap(carrier, carrier, std::move(pairs));
}

/// The multimap on n points whose pair set is the bit pattern `mask` over
/// the n² possible pairs.
inline ore::MultiMap multimap_from_mask(const ore::PointSetPtr& carrier, std::uint64_t mask) {
  const auto n = carrier->size();
  std::vector<ore::MultiMap::Pair> pairs;
  for (std::size_t b = 0; b < n * n; ++b) {
    if (mask >> b & 1U) pairs.emplace_back(b / n, b % n);
  }
  return ore::MultiMap(carrier, carrier, std::move(pairs));
}

// Embedding oracles for the group of fractions.

inline std::vector<std::int64_t> z_difference(const ore::Element& p, const ore::Element& q) {
  std::vector<std::int64_t> d(p.value.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = p.value[i] - q.value[i];
  return d;
}

inline ore::Rational q_ratio(const ore::Element& p, const ore::Element& q) {
  return ore::Rational(p.value[0], q.value[0]);
}

inline ore::Element random_element(Rng& rng, const ore::OreSemigroup& s) {
  ore::Element p;
  if (s.family() == ore::Family::nat_add) {
    for (std::size_t i = 0; i < s.rank(); ++i) p.value.push_back(rng.between(0, 9));
  } else {
    static const std::int64_t primes[] = {2, 3, 5, 7};
    std::int64_t v = 1;
    for (auto pr : primes) {
      for (auto e = rng.between(0, 2); e > 0; --e) v *= pr;
    }
    p.value.push_back(v);
  }
  return p;
}

/// |{j/D : z^m = z^n}| by brute force over the D-th roots of unity, D = lcm(1..12).
inline constexpr std::int64_t circle_grid = 27720;

inline ore::RootSet coincidence_oracle(std::int64_t m, std::int64_t n) {
  ore::RootSet out;
  for (std::int64_t j = 0; j < circle_grid; ++j) {
    if ((j * m - j * n) % circle_grid == 0) out.insert(ore::CirclePoint(ore::Rational(j, circle_grid)));
  }
  return out;
}

/// Product of two 1-graphs as a 2-graph over NatAdd(2): blue edges (e, w),
/// red edges (u, f), squares (blue (e, r(f)), red (s(e), f)) ~ (red (r(e), f), blue (e, s(f))).
inline ore::PGraph product_2graph(const ore::Graph& a, const ore::Graph& b) {
  const auto na = a.vertex_count();
  const auto nb = b.vertex_count();
  std::vector<std::string> verts;
  for (std::size_t u = 0; u < na; ++u) {
    for (std::size_t w = 0; w < nb; ++w) verts.push_back(a.vertices().label(u) + b.vertices().label(w));
  }
  const auto vid = [nb](std::size_t u, std::size_t w) { return u * nb + w; };
  std::vector<ore::GeneratorEdge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> blue, red;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    for (std::size_t w = 0; w < nb; ++w) {
      blue[{e, w}] = edges.size();
      const auto& ed = a.edges()[e];
      edges.push_back({"b" + ed.id + "_" + b.vertices().label(w), 0, vid(ed.src, w), vid(ed.rng, w)});
    }
  }
  for (std::size_t f = 0; f < b.edge_count(); ++f) {
    for (std::size_t u = 0; u < na; ++u) {
      red[{u, f}] = edges.size();
      const auto& fd = b.edges()[f];
      edges.push_back({"r" + a.vertices().label(u) + "_" + fd.id, 1, vid(u, fd.src), vid(u, fd.rng)});
    }
  }
  std::vector<ore::Square> squares;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    for (std::size_t f = 0; f < b.edge_count(); ++f) {
      const auto& ed = a.edges()[e];
      const auto& fd = b.edges()[f];
      squares.push_back({blue[{e, fd.rng}], red[{ed.src, f}], red[{ed.rng, f}], blue[{e, fd.src}]});
    }
  }
  return ore::PGraph(ore::OreSemigroup::nat_add(2), ore::make_point_set(verts),
                     {ore::Element{{1, 0}}, ore::Element{{0, 1}}}, std::move(edges), std::move(squares));
}

// Finite groups as Cayley tables.

inline ore::Table cyclic_table(std::size_t n) {
  ore::Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

inline ore::Table klein_table() {
  ore::Table t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return t;
}

/// S3 with elements the permutations of {0,1,2} in lexicographic order; the
/// product is composition (a·b)(i) = a(b(i)). Element 0 is the identity.
inline ore::Table s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  ore::Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return t;
}

/// A global action of a group on some copies of itself (left translation)
/// plus fixed points, restricted to a random subset Y: θ_g is x ↦ g·x on
/// {x ∈ Y : g·x ∈ Y}. Such restrictions are partial actions.
inline ore::PartialAction random_partial_action(Rng& rng) {
  ore::Table table;
  switch (rng.between(0, 2)) {
    case 0: table = cyclic_table(static_cast<std::size_t>(rng.between(2, 5))); break;
    case 1: table = klein_table(); break;
    default: table = s3_table(); break;
  }
  const auto order = table.size();
  const auto copies = static_cast<std::size_t>(rng.between(1, 2));
  const auto fixed = static_cast<std::size_t>(rng.between(0, 2));
  const auto total = copies * order + fixed;
  const auto act = [&](std::size_t g, std::size_t x) {
    if (x >= copies * order) return x;
    return (x / order) * order + table[g][x % order];
  };
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < total; ++x) {
    if (rng.coin(0.75)) keep.push_back(x);
  }
  if (keep.empty()) keep.push_back(0);
  std::map<std::size_t, std::size_t> position;
  std::vector<std::string> names;
  for (auto x : keep) {
    position[x] = names.size();
    names.push_back("x" + std::to_string(x));
  }
  auto carrier = ore::make_point_set(names);
  std::map<std::size_t, ore::PartialBijection> theta;
  for (std::size_t g = 0; g < order; ++g) {
    std::vector<ore::MultiMap::Pair> pairs;
    for (auto x : keep) {
      const auto it = position.find(act(g, x));
      if (it != position.end()) pairs.emplace_back(position[x], it->second);
    }
    theta.emplace(g, ore::PartialBijection(ore::MultiMap(carrier, carrier, std::move(pairs))));
  }
  std::vector<std::string> group_names;
  for (std::size_t g = 0; g < order; ++g) group_names.push_back("g" + std::to_string(g));
  return ore::PartialAction(carrier, ore::OreSemigroup::finite_group(table, 0, group_names), std::move(theta));
}

struct Mutation {
  ore::PartialAction action;
  std::size_t g;
  std::size_t x1;
  std::size_t x2;
};

/// Swaps θ_g(x1) and θ_g(x2) for some g ≠ e and x1, x2 ∈ dom θ_g with
/// θ_g(x1) ∉ {x1, x2}. The result breaks θ_{g⁻¹}∘θ_g = id at x1.
inline std::optional<Mutation> mutate(Rng& rng, const ore::PartialAction& a) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> options;
  const auto e = a.identity();
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    if (g == e) continue;
    const auto dom = a.theta(g).domain();
    for (auto x1 : dom) {
      const auto y1 = *a.theta(g)(x1);
      for (auto x2 : dom) {
        if (x2 != x1 && y1 != x1 && y1 != x2) options.emplace_back(g, x1, x2);
      }
    }
  }
  if (options.empty()) return std::nullopt;
  const auto [g, x1, x2] = options[rng.index(options.size())];
  std::map<std::size_t, ore::PartialBijection> theta;
  for (std::size_t h = 0; h < a.group().order(); ++h) {
    if (h != g) {
      theta.emplace(h, a.theta(h));
      continue;
    }
    std::vector<ore::MultiMap::Pair> pairs;
    for (auto [x, y] : a.theta(g).map().pairs()) {
      if (x == x1) y = *a.theta(g)(x2);
      else if (x == x2) y = *a.theta(g)(x1);
      pairs.emplace_back(x, y);
    }
    theta.emplace(g, ore::PartialBijection(ore::MultiMap(a.carrier_ptr(), a.carrier_ptr(), std::move(pairs))));
  }
  return Mutation{ore::PartialAction(a.carrier_ptr(), a.group(), std::move(theta)), g, x1, x2};
}

}  // namespace testkit
