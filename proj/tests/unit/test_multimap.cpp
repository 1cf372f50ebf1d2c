#include "doctest.h"

#include "ore/errors.hpp"
#include "ore/multimap.hpp"
#include "support/testkit.hpp"

using namespace ore;

namespace {

PointSetPtr p123() { return make_point_set({"1", "2", "3"}); }

MultiMap mm(const PointSetPtr& c, std::vector<MultiMap::Pair> pairs) { return MultiMap(c, c, std::move(pairs)); }

}  // namespace

TEST_CASE("compose evaluates the union formula") {
  const auto c = p123();
  const auto f = mm(c, {{0, 1}, {0, 2}});
  const auto g = mm(c, {{1, 0}, {2, 2}});
  CHECK(compose(g, f) == mm(c, {{0, 0}, {0, 2}}));
  CHECK(compose(MultiMap::identity(c), f) == f);
  CHECK(compose(g, MultiMap::empty(c, c)) == MultiMap::empty(c, c));
  CHECK_THROWS_AS(compose(g, MultiMap(c, make_point_set({"a"}), {})), DomainError);
}

TEST_CASE("inverse and preimage") {
  const auto c = p123();
  CHECK(inverse(mm(c, {{0, 1}})) == mm(c, {{1, 0}}));
  CHECK(inverse(MultiMap::identity(c)) == MultiMap::identity(c));
  const auto f = mm(c, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(preimage(f, {2}) == Subset{0, 1});
  CHECK(preimage(f, {}).empty());
  CHECK_THROWS_AS(preimage(f, {3}), DomainError);
}

TEST_CASE("round_trip") {
  const auto c = p123();
  const auto bij = mm(c, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(round_trip(bij) == MultiMap::identity(c));
  const auto f = mm(c, {{0, 2}, {1, 2}});
  const auto rt = round_trip(f);
  CHECK(rt.at(2) == Subset{2});
  CHECK(rt.at(0).empty());
  CHECK(round_trip(MultiMap::empty(c, c)) == MultiMap::empty(c, c));
}

TEST_CASE("iterate and periodic points") {
  const auto c = p123();
  const auto cycle = mm(c, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(iterate(cycle, 0) == MultiMap::identity(c));
  CHECK(iterate(cycle, 1) == cycle);
  CHECK(iterate(MultiMap::identity(c), 5) == MultiMap::identity(c));
  const auto swap = mm(c, {{0, 1}, {1, 0}});
  CHECK(iterate(swap, 2) == mm(c, {{0, 0}, {1, 1}}));
  CHECK(periodic_points(cycle, 1).empty());
  CHECK(periodic_points(cycle, 2).empty());
  CHECK(periodic_points(cycle, 3) == Subset{0, 1, 2});
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(periodic_points(cycle, n) == testkit::periodic_oracle(cycle, n));
    CHECK(periodic_points(MultiMap::identity(c), n) == Subset{0, 1, 2});
    CHECK(periodic_points(MultiMap::empty(c, c), n).empty());
  }
  CHECK_THROWS_AS(periodic_points(cycle, 0), DomainError);
  CHECK_THROWS_AS(iterate(MultiMap(c, make_point_set({"a"}), {}), 2), DomainError);
}

TEST_CASE("relation laws on random maps") {
  testkit::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto c = numbered_point_set(static_cast<std::size_t>(rng.between(1, 5)));
    const auto f = testkit::random_multimap(rng, c, 0.3);
    const auto g = testkit::random_multimap(rng, c, 0.3);
    const auto h = testkit::random_multimap(rng, c, 0.3);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(inverse(compose(g, f)) == compose(inverse(f), inverse(g)));
    Subset b;
    for (std::size_t x = 0; x < c->size(); ++x) {
      if (rng.coin()) b.push_back(x);
    }
    CHECK(preimage(f, b) == inverse(f).apply(b));
    const auto rt = round_trip(f);
    const auto img = f.image();
    for (std::size_t x = 0; x < c->size(); ++x) {
      const auto in_rt = rt.contains(x, x);
      CHECK(in_rt == std::binary_search(img.begin(), img.end(), x));
    }
    for (unsigned n = 0; n <= 4; ++n) CHECK(testkit::to_matrix(iterate(f, n)) == testkit::matrix_power(testkit::to_matrix(f), n));
  }
}

TEST_CASE("point sets") {
  CHECK_THROWS_AS(PointSet({"a", "a"}), FormatError);
  const PointSet s({"a", "b"});
  CHECK(s.index_of("b") == 1);
  CHECK_FALSE(s.find("c").has_value());
  CHECK_THROWS_AS(s.index_of("c"), FormatError);
}
