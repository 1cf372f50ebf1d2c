#include "doctest.h"

#include <string>

#include "ore/errors.hpp"
#include "ore/io.hpp"
#include "ore/pgraph.hpp"
#include "support/testkit.hpp"

using namespace ore;

namespace {

PGraph fixture(const std::string& name) {
  return pgraph_from_json(read_json_file(std::string(ORE_CORPUS_DIR) + "/" + name + ".json"));
}

bool has_defect(const PGraphReport& r, PGraphDefect d) {
  for (const auto& v : r.violations) {
    if (v.defect == d) return true;
  }
  return false;
}

PGraph with_squares(const PGraph& p, std::vector<Square> squares) {
  return PGraph(p.semigroup(), p.vertices_ptr(), p.generators(), p.edges(), std::move(squares));
}

}  // namespace

TEST_CASE("the one-vertex 2-graph verifies") {
  const auto p = fixture("one_vertex_2graph");
  CHECK(verify_pgraph(p).ok());
  CHECK(fiber_graph(p, {1, 1}).edge_count() == 1);
  CHECK(fiber_graph(p, {2, 3}).edge_count() == 1);
  const auto e = fiber_graph(p, {0, 0});
  REQUIRE(e.edge_count() == 1);
  CHECK(e.edges()[0].id == "v");
  CHECK(dual_at(p, {0, 0}) == MultiMap::identity(p.vertices_ptr()));
  CHECK(dual_at(p, {1, 0}) == dual_map(p.generator_fiber(0)));
}

TEST_CASE("dropping a square leaves an orphan") {
  const auto p = fixture("twisted_2graph");
  REQUIRE(verify_pgraph(p).ok());
  auto squares = p.squares();
  squares.pop_back();
  const auto r = verify_pgraph(with_squares(p, squares));
  REQUIRE(has_defect(r, PGraphDefect::bijectivity));
  CHECK(r.violations.front().witness.contains("orphan"));
}

TEST_CASE("a square with the wrong range is a preservation defect") {
  std::vector<GeneratorEdge> edges{{"bu", 0, 0, 0}, {"bw", 0, 1, 1}, {"r", 1, 0, 1}, {"s", 1, 1, 0}};
  const auto verts = make_point_set({"u", "w"});
  // (bw, r) runs u -> w; (s, bw) runs w -> u.
  std::vector<Square> squares{{1, 2, 3, 1}};
  const PGraph p(OreSemigroup::nat_add(2), verts, {Element{{1, 0}}, Element{{0, 1}}}, edges, squares);
  CHECK(has_defect(verify_pgraph(p), PGraphDefect::preservation));
}

TEST_CASE("malformed presentations are rejected") {
  const auto p = fixture("one_vertex_2graph");
  CHECK_THROWS_AS(with_squares(p, {{0, 0, 1, 1}}), FormatError);
  CHECK_THROWS_AS(PGraph(OreSemigroup::nat_add(2), p.vertices_ptr(), p.generators(),
                         {{"b", 0, 0, 0}, {"b", 1, 0, 0}}, {}),
                  FormatError);
  CHECK_THROWS_AS(PGraph(OreSemigroup::nat_add(2), p.vertices_ptr(), {Element{{1, 1}}, Element{{0, 1}}}, {}, {}),
                  FormatError);
  Table z2{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(PGraph(OreSemigroup::finite_group(z2, 0), p.vertices_ptr(), {Element{{1}}}, {}, {}), FormatError);
}

TEST_CASE("normal forms sort generators") {
  const auto p = fixture("twisted_2graph");
  const auto r1 = *p.find_edge("r1");
  const auto b2 = *p.find_edge("b2");
  const auto b1 = *p.find_edge("b1");
  const auto nf = p.normal_form({r1, b2});
  REQUIRE(nf);
  CHECK(*nf == EdgePath{b1, r1});
  CHECK(p.degree_of({r1, b2, b1}) == Exponents{2, 1});
}

TEST_CASE("cube consistency on three generators") {
  const auto p = fixture("one_vertex_3graph");
  CHECK(verify_pgraph(p).ok());
  CHECK(check_semigroup_law_box(p, 1).is_holds());
  CHECK(fiber_graph(p, {1, 1, 1}).edge_count() == 1);
}

TEST_CASE("semigroup law and path counts on product graphs") {
  testkit::Rng rng(23);
  for (int i = 0; i < 8; ++i) {
    const auto a = testkit::random_graph(rng, static_cast<std::size_t>(rng.between(1, 3)),
                                         static_cast<std::size_t>(rng.between(1, 3)));
    const auto b = testkit::random_graph(rng, static_cast<std::size_t>(rng.between(1, 3)),
                                         static_cast<std::size_t>(rng.between(1, 3)));
    const auto p = testkit::product_2graph(a, b);
    REQUIRE(verify_pgraph(p).ok());
    CHECK(check_semigroup_law_box(p, 1).is_holds());
    for (std::int64_t x = 0; x <= 1; ++x) {
      for (std::int64_t y = 0; y <= 1; ++y) {
        const auto composed = compose(dual_at(p, {x, 0}), dual_at(p, {0, y}));
        CHECK(composed == dual_at(p, {x, y}));
        std::size_t pairs = 0;
        for (const auto& mu : paths_of_degree(p, {x, 0})) {
          for (const auto& nu : paths_of_degree(p, {0, y})) pairs += mu.src == nu.rng ? 1 : 0;
        }
        CHECK(paths_of_degree(p, {x, y}).size() == pairs);
      }
    }
  }
}

TEST_CASE("the corrupted fixture fails the law") {
  const auto v = check_semigroup_law_box(fixture("corrupted_square"), 1);
  REQUIRE(v.is_fails());
  CHECK(v.witness.contains("vertex"));
}

TEST_CASE("aperiodicity search") {
  const auto flip = fixture("one_vertex_2graph");
  AperiodicityOptions opt;
  opt.box = {2, 2};
  opt.f_max = 1;
  const auto v = check_aperiodicity(flip, opt);
  REQUIRE(v.is_fails());
  CHECK(validate_aperiodicity_witness(flip, v.witness));

  CHECK(check_aperiodicity(fixture("rank1_source")).is_holds());
  const auto cyc = check_aperiodicity(fixture("rank1_cycle"));
  REQUIRE(cyc.is_fails());
  CHECK(validate_aperiodicity_witness(fixture("rank1_cycle"), cyc.witness));

  opt.force_search = true;
  opt.box = {3};
  opt.f_max = 2;
  CHECK(check_aperiodicity(fixture("rank1_cycle"), opt).is_fails());
  const auto forced = check_aperiodicity(fixture("rank1_source"), opt);
  CHECK(forced.is_unknown());
  CHECK(forced.bound.has_value());
}

TEST_CASE("tampered witnesses do not validate") {
  const auto flip = fixture("one_vertex_2graph");
  AperiodicityOptions opt;
  opt.box = {2, 2};
  opt.f_max = 1;
  auto w = check_aperiodicity(flip, opt).witness;
  w["enumerations"][0]["mu"] = Json::array({"b"});
  CHECK_FALSE(validate_aperiodicity_witness(flip, w));
}

TEST_CASE("invariant sets of P-graphs") {
  const auto prod = fixture("product_loops");
  const auto sets = invariant_sets_p(prod);
  CHECK(sets.size() > 2);
  CHECK(sets.front().empty());
  CHECK(sets.back().size() == prod.vertices().size());
  CHECK(is_minimal(prod).is_fails());
  CHECK(invariant_sets_p(fixture("one_vertex_2graph")).size() == 2);
  CHECK_THROWS_AS(invariant_sets_p(fixture("corrupted_square")), DomainError);
}

TEST_CASE("P-graph simplicity reports") {
  AperiodicityOptions opt;
  opt.box = {2, 2};
  opt.f_max = 1;
  CHECK(simplicity_report_p(fixture("one_vertex_2graph"), opt).conclusion == "hypotheses not met: aperiodicity");
  CHECK(simplicity_report_p(fixture("rank1_source")).conclusion == "hypotheses not met: regularity");
  CHECK(simplicity_report_p(fixture("corrupted_square")).conclusion ==
        "not a P-graph: factorization data inconsistent");
}

TEST_CASE("natmult P-graphs") {
  const auto p = fixture("natmult_one_vertex");
  CHECK(verify_pgraph(p).ok());
  CHECK(p.exponents(Element{{12}}) == Exponents{2, 1});
  CHECK_THROWS_AS(p.exponents(Element{{5}}), DomainError);
  CHECK(check_semigroup_law_box(p, 2).is_holds());
}
