#include "doctest.h"

#include "ore/errors.hpp"
#include "ore/semigroup.hpp"
#include "support/testkit.hpp"

using namespace ore;

namespace {

Element el(std::initializer_list<std::int64_t> v) { return Element{v}; }

OreSemigroup z3() {
  return OreSemigroup::finite_group(testkit::cyclic_table(3), 0, {"0", "1", "2"});
}

}  // namespace

TEST_CASE("leq on the built-in families") {
  const auto n2 = OreSemigroup::nat_add(2);
  CHECK(n2.leq(el({1, 2}), el({3, 5})));
  CHECK_FALSE(n2.leq(el({3, 2}), el({1, 5})));
  const auto m = OreSemigroup::nat_mult();
  CHECK(m.leq(el({2}), el({6})));
  CHECK_FALSE(m.leq(el({4}), el({6})));
  const auto g = z3();
  for (std::int64_t a = 0; a < 3; ++a) {
    for (std::int64_t b = 0; b < 3; ++b) CHECK(g.leq(el({a}), el({b})));
  }
  CHECK_THROWS_AS(n2.leq(el({-1, 0}), el({0, 0})), DomainError);
  CHECK_THROWS_AS(m.leq(el({0}), el({1})), DomainError);
}

TEST_CASE("residual") {
  const auto n2 = OreSemigroup::nat_add(2);
  CHECK(n2.residual(el({1, 2}), el({3, 5})) == el({2, 3}));
  const auto m = OreSemigroup::nat_mult();
  CHECK(m.residual(el({2}), el({6})) == el({3}));
  CHECK_THROWS_AS(m.residual(el({4}), el({6})), NotComparableError);
  const auto g = z3();
  const auto r = g.residual(el({2}), el({1}));
  CHECK(g.multiply(el({2}), r) == el({1}));
}

TEST_CASE("join and directed witness") {
  const auto n2 = OreSemigroup::nat_add(2);
  CHECK(n2.join(el({1, 3}), el({2, 1})) == el({2, 3}));
  CHECK(n2.directed_witness(el({1, 0}), el({0, 1})) == el({1, 1}));
  CHECK(OreSemigroup::nat_add(1).directed_witness(el({3}), el({5})) == el({5}));
  const auto m = OreSemigroup::nat_mult();
  CHECK(m.join(el({4}), el({6})) == el({12}));
  CHECK(m.directed_witness(el({2}), el({3})) == el({6}));
  CHECK(z3().join(el({1}), el({2})) == el({2}));
}

TEST_CASE("sim_r is equality for the built-ins") {
  const auto m = OreSemigroup::nat_mult();
  CHECK_FALSE(m.sim_r(el({2}), el({3})));
  CHECK(m.sim_r(el({6}), el({6})));
  const auto n2 = OreSemigroup::nat_add(2);
  CHECK_FALSE(n2.sim_r(el({1, 0}), el({0, 1})));
  const auto g = z3();
  for (std::int64_t a = 0; a < 3; ++a) {
    for (std::int64_t b = 0; b < 3; ++b) CHECK(g.sim_r(el({a}), el({b})) == (a == b));
  }
}

TEST_CASE("fraction arithmetic examples") {
  const auto n1 = OreSemigroup::nat_add(1);
  const auto a = make_fraction(n1, el({2}), el({3}));
  const auto b = make_fraction(n1, el({5}), el({7}));
  CHECK(frac_mul(n1, a, b).normal_form() == NormalForm{std::vector<std::int64_t>{-3}});
  CHECK(frac_inv(n1, make_fraction(n1, el({2}), el({5}))).normal_form() ==
        NormalForm{std::vector<std::int64_t>{3}});
  CHECK(frac_inv(n1, frac_identity(n1)) == frac_identity(n1));

  const auto m = OreSemigroup::nat_mult();
  CHECK(frac_inv(m, make_fraction(m, el({2}), el({3}))).normal_form() == NormalForm{Rational(3, 2)});
  CHECK(embed(m, el({6})).normal_form() == NormalForm{Rational(6)});
  CHECK(frac_mul(m, embed(m, el({4})), embed(m, el({6}))) == embed(m, el({24})));

  const auto n2 = OreSemigroup::nat_add(2);
  CHECK(embed(n2, el({2, 3})).normal_form() == NormalForm{std::vector<std::int64_t>{2, 3}});
  CHECK(embed(n2, n2.identity()) == frac_identity(n2));
  const auto c = make_fraction(n2, el({4, 1}), el({1, 6}));
  CHECK(frac_mul(n2, frac_identity(n2), c) == c);
}

TEST_CASE("fractions over a finite group") {
  const auto g = z3();
  const auto a = make_fraction(g, el({1}), el({2}));
  CHECK(a.normal_form() == NormalForm{std::size_t{2}});
  CHECK(frac_mul(g, a, frac_inv(g, a)) == frac_identity(g));
}

TEST_CASE("the product does not depend on the chosen upper bound") {
  testkit::Rng rng(11);
  const auto n2 = OreSemigroup::nat_add(2);
  for (int i = 0; i < 200; ++i) {
    const auto a = make_fraction_unreduced(n2, testkit::random_element(rng, n2), testkit::random_element(rng, n2));
    const auto b = make_fraction_unreduced(n2, testkit::random_element(rng, n2), testkit::random_element(rng, n2));
    auto w = n2.join(a.denominator(), b.numerator());
    w = n2.multiply(w, testkit::random_element(rng, n2));
    CHECK(frac_mul_at(n2, a, b, w) == frac_mul(n2, a, b));
  }
  const auto n1 = OreSemigroup::nat_add(1);
  CHECK_THROWS_AS(frac_mul_at(n1, embed(n1, el({1})), make_fraction(n1, el({4}), el({0})), el({2})), DomainError);
}

TEST_CASE("verify_finite_table") {
  CHECK(verify_finite_table(testkit::cyclic_table(3)).ok());
  // Left-zero semigroup {a, b} (x·y = x) with identity 1 adjoined at index 0.
  const Table left_zero{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  const auto r = verify_finite_table(left_zero);
  CHECK(r.associative);
  CHECK(r.has_identity);
  CHECK_FALSE(r.left_cancellative);
  CHECK_FALSE(r.ok());
  const Table no_identity{{0, 0}, {0, 0}};
  CHECK_FALSE(verify_finite_table(no_identity).has_identity);
  CHECK_THROWS_AS(verify_finite_table(Table{{0, 1}, {1}}), FormatError);
  CHECK_THROWS_AS(OreSemigroup::finite_group(left_zero, 0), DomainError);
}

TEST_CASE("parsing semigroups and elements") {
  CHECK(parse_semigroup_spec("natadd:3").rank() == 3);
  CHECK(parse_semigroup_spec("natmult").family() == Family::nat_mult);
  CHECK_THROWS_AS(parse_semigroup_spec("natadd:0"), FormatError);
  CHECK_THROWS_AS(parse_semigroup_spec("bogus"), FormatError);
  const auto n2 = OreSemigroup::nat_add(2);
  CHECK(n2.parse_element("(1, 2)") == el({1, 2}));
  CHECK_THROWS_AS(n2.parse_element("(1,-2)"), FormatError);
  CHECK_THROWS_AS(n2.parse_element("(1,2,3)"), FormatError);
  CHECK(OreSemigroup::nat_mult().parse_element("12") == el({12}));
  CHECK(z3().parse_element("2") == el({2}));
}
