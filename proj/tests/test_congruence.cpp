#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "fixtures.hpp"
#include "sposet/congruence.hpp"
#include "sposet/morphism.hpp"

using namespace sposet;
using fixtures::antichain2;
using fixtures::chain2;
using fixtures::u2;

TEST_CASE("empty relation set leaves the poset unchanged") {
  SPoset const   B = chain2();
  QuotientSPoset q = order_congruence(B, {});
  CHECK(q.classes.size() == 2);
  CHECK(q.class_of.size() == 2);
  CHECK(q.preorder == B.order());
  REQUIRE(isomorphic(q.base, q.quotient).has_value());
}

TEST_CASE("a symmetric pair collapses its elements") {
  SPoset const   B = chain2();
  QuotientSPoset q = order_congruence(B, {{0, 1}, {1, 0}});
  CHECK(q.classes.size() == 1);
  CHECK(q.class_of[0] == q.class_of[1]);
  CHECK(q.quotient.size() == 1);
  CHECK(validate_sposet(q.quotient).ok());
}

TEST_CASE("a directed pair only adds order") {
  SPoset const   B = antichain2();
  QuotientSPoset q = order_congruence(B, {{0, 1}});
  CHECK(q.classes.size() == 2);
  CHECK(q.preorder(0, 1));
  CHECK_FALSE(q.preorder(1, 0));
  CHECK(q.quotient.leq(q.class_of[0], q.class_of[1]));
  CHECK_FALSE(q.quotient.leq(q.class_of[1], q.class_of[0]));
}

TEST_CASE("opposite directed pairs meet in antisymmetrisation") {
  SPoset const   B = antichain2();
  QuotientSPoset q = order_congruence(B, {{0, 1}, {1, 0}});
  CHECK(q.classes.size() == 1);
}

TEST_CASE("identification propagates through the action") {
  // free act on two generators over the semilattice: merging the
  // generators must merge their e-translates
  SPoset const   F = free_act(u2(-1), Side::left, 2);
  QuotientSPoset q = order_congruence(F, {{0, 2}, {2, 0}});
  CHECK(q.class_of[0] == q.class_of[2]);
  CHECK(q.class_of[1] == q.class_of[3]);
  CHECK(q.classes.size() == 2);
  CHECK(validate_sposet(q.quotient).ok());
}

TEST_CASE("order added between generators propagates through the action") {
  SPoset const   F = free_act(u2(-1), Side::left, 2);
  QuotientSPoset q = order_congruence(F, {{0, 2}});
  CHECK(q.classes.size() == 4);
  CHECK(q.preorder(0, 2));
  CHECK(q.preorder(1, 3));  // e.g0 <= e.g1 forced by stability
  CHECK_FALSE(q.preorder(2, 0));
}

TEST_CASE("class lists are ascending and consistent with the projection") {
  SPoset const   F = free_act(u2(-1), Side::left, 2);
  QuotientSPoset q = order_congruence(F, {{0, 2}, {2, 0}, {1, 3}});
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    REQUIRE_FALSE(q.classes[c].empty());
    CHECK(std::is_sorted(q.classes[c].begin(), q.classes[c].end()));
    for (std::size_t member : q.classes[c]) {
      CHECK(q.class_of[member] == c);
    }
  }
  // the projection is a pomorphism onto the quotient
  CHECK(morphism_kind(q.base, q.quotient, PoMap{q.class_of}) != MapKind::none);
}

TEST_CASE("out-of-range pairs are rejected") {
  SPoset const B = chain2();
  CHECK_THROWS_AS(order_congruence(B, {{0, 7}}), std::invalid_argument);
}

TEST_CASE("universal property against hand-picked targets") {
  SPoset const B = antichain2();
  SPoset const C = chain2();
  SECTION("target compatible with the added pair") {
    QuotientSPoset q = order_congruence(B, {{0, 1}});
    CHECK(check_universal_property(q, {{0, 1}}, C));
    CHECK(check_universal_property(q, {{0, 1}}, B));
  }
  SECTION("collapse against one- and two-element targets") {
    QuotientSPoset q = order_congruence(B, {{0, 1}, {1, 0}});
    CHECK(check_universal_property(q, {{0, 1}, {1, 0}}, C));
    CHECK(check_universal_property(q, {{0, 1}, {1, 0}}, B));
  }
  SECTION("over the semilattice") {
    SPoset const   F = free_act(u2(-1), Side::left, 2);
    QuotientSPoset q = order_congruence(F, {{0, 2}});
    CHECK(check_universal_property(q, {{0, 2}}, regular_act(u2(-1), Side::left)));
    CHECK(check_universal_property(q, {{0, 2}}, one_element_act(u2(-1), Side::left)));
  }
}
