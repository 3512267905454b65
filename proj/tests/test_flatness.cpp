#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "fixtures.hpp"
#include "sposet/flatness.hpp"
#include "sposet/search.hpp"

using namespace sposet;
using fixtures::chain2;
using fixtures::u2;

TEST_CASE("standard quotient of the smallest single skeleton") {
  PomonoidPtr const S  = u2(-1);
  Skeleton const    sk{{0, 0}, {}};
  StandardQuotient const sq = build_standard_quotient(S, sk);

  CHECK(sq.skeleton == sk);
  // free right act on the two generators x, x'
  CHECK(sq.free.size() == 4);
  CHECK(sq.relations.size() == 1);
  CHECK(validate_sposet(sq.quotient.quotient).ok());

  // the defining relation x.s1 <= x'.t1 makes the marked classes comparable
  CHECK(sq.quotient.quotient.leq(sq.marked_x, sq.marked_xp));

  std::size_t args[2] = {sq.marked_x, sq.marked_xp};
  CHECK(eval_skeleton_formula(SkeletonFormula::delta_leq, sk, sq.quotient.quotient, args)
            .holds);

  // the marked sub-act contains both marked classes at the stated spots
  CHECK(sq.sub_carrier.size() == sq.sub.size());
  CHECK(sq.sub_carrier[sq.sub_x] == sq.marked_x);
  CHECK(sq.sub_carrier[sq.sub_xp] == sq.marked_xp);
  CHECK(validate_sposet(sq.sub).ok());
}

TEST_CASE("standard quotient of a doubled skeleton satisfies delta") {
  PomonoidPtr const S = u2(-1);
  Skeleton const    sk{{1, 0}, {0, 1}};  // x.e <= x'.1, then x'.1 <= x.e
  StandardQuotient const sq = build_standard_quotient(S, sk);
  std::size_t args[2] = {sq.marked_x, sq.marked_xp};
  CHECK(eval_skeleton_formula(SkeletonFormula::delta, sk, sq.quotient.quotient, args)
            .holds);
}

TEST_CASE("standard quotient family mirrors skeleton enumeration") {
  PomonoidPtr const            S = u2(-1);
  StandardQuotientFamily const fam(S, 4, true);
  CHECK(fam.max_flat_len() == 4);
  CHECK(fam.doubled());
  CHECK(fam.quotients().size() == enumerate_skeletons(2, 4, true).size());

  StandardQuotientFamily const single(S, 4, false);
  CHECK_FALSE(single.doubled());
  CHECK(single.quotients().size() == enumerate_skeletons(2, 4, false).size());
}

TEST_CASE("free acts pass every ideal-flatness variant") {
  for (int order : {-1, 0, 1}) {
    SPoset const B = regular_act(u2(order), Side::left);
    for (IdealVariant v : {IdealVariant::PWF, IdealVariant::WF, IdealVariant::PWPF,
                           IdealVariant::WPF}) {
      INFO(ideal_variant_name(v));
      FlatnessVerdict const verdict = check_ideal_flatness(B, v);
      CHECK(verdict.status == FlatnessVerdict::Status::holds);
      CHECK(verdict.ok());
    }
  }
}

TEST_CASE("ideal-flatness verdicts match the class dispatcher") {
  PomonoidPtr const S = u2(-1);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (SPoset const& B : enumerate_sposets(S, m, Side::left)) {
      CHECK(check_ideal_flatness(B, IdealVariant::PWF).ok()
            == evaluate_class(B, ClassId::PWF));
      CHECK(check_ideal_flatness(B, IdealVariant::WF).ok()
            == evaluate_class(B, ClassId::WF));
      CHECK(check_ideal_flatness(B, IdealVariant::PWPF).ok()
            == evaluate_class(B, ClassId::PWPF));
      CHECK(check_ideal_flatness(B, IdealVariant::WPF).ok()
            == evaluate_class(B, ClassId::WPF));
    }
  }
}

TEST_CASE("the small semilattice families pass every ideal variant") {
  // empirical golden: over both orientations of the two-element
  // semilattice, every act of size at most three embeds its ideal tensors
  for (int order : {-1, 0, 1}) {
    PomonoidPtr const S = u2(order);
    for (std::size_t m = 1; m <= 3; ++m) {
      for (SPoset const& B : enumerate_sposets(S, m, Side::left)) {
        for (IdealVariant v : {IdealVariant::PWF, IdealVariant::WF, IdealVariant::PWPF,
                               IdealVariant::WPF}) {
          CHECK(check_ideal_flatness(B, v).ok());
        }
      }
    }
  }
}

TEST_CASE("bounded po-flatness genuinely refutes some semilattice acts") {
  // empirical golden: exactly 7 of the 29 size-3 acts over the trivially
  // ordered semilattice fail the single-skeleton replacement check
  PomonoidPtr const S = u2(0);
  std::size_t       failures = 0;
  for (SPoset const& B : enumerate_sposets(S, 3, Side::left)) {
    FlatnessVerdict const v = check_flat_bounded(B, true, 6);
    if (!v.ok()) {
      ++failures;
      CHECK(v.status == FlatnessVerdict::Status::fails);
      CHECK_FALSE(v.detail.empty());
      REQUIRE(v.failing_skeleton.has_value());
      CHECK_FALSE(v.failing_skeleton->doubled());
      REQUIRE(v.failing_instance.has_value());
      CHECK(v.failing_instance->size() == 2);
    }
  }
  CHECK(failures == 7);
}

TEST_CASE("bounded flatness on flat families") {
  SECTION("the regular act is flat up to any bound") {
    SPoset const B = regular_act(u2(-1), Side::left);
    FlatnessVerdict const v = check_flat_bounded(B, false, 6);
    CHECK(v.status == FlatnessVerdict::Status::bounded_holds);
    CHECK(v.bound == 6);
    CHECK(v.ok());
    CHECK(check_flat_bounded(B, true, 6).ok());
  }
  SECTION("everything over the trivial monoid is po-flat") {
    SPoset const C = chain2();
    CHECK(check_flat_bounded(C, true, 4).ok());
    CHECK(check_flat_bounded(C, false, 4).ok());
  }
  SECTION("a verdict at a larger bound implies the smaller one") {
    for (SPoset const& B : enumerate_sposets(u2(-1), 3, Side::left)) {
      if (check_flat_bounded(B, false, 6).ok()) {
        CHECK(check_flat_bounded(B, false, 4).ok());
      }
      if (check_flat_bounded(B, true, 6).ok()) {
        CHECK(check_flat_bounded(B, true, 2).ok());
      }
    }
  }
  SECTION("the family overload agrees with the direct form") {
    PomonoidPtr const            S = u2(-1);
    StandardQuotientFamily const doubled(S, 4, true);
    StandardQuotientFamily const single(S, 4, false);
    for (SPoset const& B : enumerate_sposets(S, 3, Side::left)) {
      CHECK(check_flat_bounded(B, false, doubled).ok()
            == check_flat_bounded(B, false, 4).ok());
      CHECK(check_flat_bounded(B, true, single).ok()
            == check_flat_bounded(B, true, 4).ok());
    }
  }
  SECTION("undersized bounds are rejected") {
    SPoset const B = regular_act(u2(-1), Side::left);
    CHECK_THROWS_AS(check_flat_bounded(B, false, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_flat_bounded(B, true, 1), std::invalid_argument);
  }
}

TEST_CASE("replacement skeleton search finds the trivial replacement") {
  PomonoidPtr const S = u2(-1);
  Skeleton const    sk{{0, 0}, {}};
  std::vector<SPoset> const family{regular_act(S, Side::left)};
  auto const found = replacement_skeleton_search(S, sk, family, 4);
  REQUIRE_FALSE(found.empty());
  CHECK(std::find(found.begin(), found.end(), sk) != found.end());
  for (std::size_t i = 1; i < found.size(); ++i) {
    CHECK(found[i - 1].flat_length() <= found[i].flat_length());
  }
  // results are deduplicated
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      CHECK_FALSE(found[i] == found[j]);
    }
  }
}

TEST_CASE("replacement search validates its family") {
  PomonoidPtr const S = u2(-1);
  Skeleton const    sk{{0, 0}, {}};
  std::vector<SPoset> const wrong_side{regular_act(S, Side::right)};
  CHECK_THROWS_AS(replacement_skeleton_search(S, sk, wrong_side, 4),
                  std::invalid_argument);
}
