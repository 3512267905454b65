#ifndef SPOSET_TESTS_FIXTURES_HPP_
#define SPOSET_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "sposet/pomonoid.hpp"
#include "sposet/sposet.hpp"

//! Hand-built structures shared across the test binaries.  Everything here
//! is small enough to verify by eye; the tests treat these as ground truth.
namespace fixtures {

using sposet::Pomonoid;
using sposet::PomonoidPtr;
using sposet::Relation;
using sposet::Side;
using sposet::SPoset;

//! Discrete order on n points.
inline Relation discrete(std::size_t n) {
  return Relation::identity(n);
}

//! Order from strict pairs (reflexive-transitively closed).
inline Relation order_from(std::size_t n,
                           std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  Relation r = Relation::from_pairs(n, pairs);
  r.reflexive_close();
  r.transitive_close();
  return r;
}

//! The one-element monoid.
inline PomonoidPtr trivial_monoid() {
  return sposet::make_pomonoid(1, {0}, 0, discrete(1), {"1"});
}

//! Two-element semilattice {1, e}, e idempotent, 1 at index 0.
//! order: 0 = trivial, -1 = e < 1, +1 = 1 < e.
inline PomonoidPtr u2(int order = 0) {
  Relation leq = discrete(2);
  if (order < 0) {
    leq.set(1, 0);
  } else if (order > 0) {
    leq.set(0, 1);
  }
  return sposet::make_pomonoid(2, {0, 1, 1, 1}, 0, leq, {"1", "e"});
}

//! The two-element group {1, g} with the trivial order (the only
//! compatible one on a group).
inline PomonoidPtr z2() {
  return sposet::make_pomonoid(2, {0, 1, 1, 0}, 0, discrete(2), {"1", "g"});
}

//! Poset with trivial action of the given monoid (every s acts as the
//! identity); only valid when the monoid order is trivial or the carrier
//! order absorbs it — trivial_monoid() and z2() are the safe sources.
inline SPoset plain_poset(PomonoidPtr S, Side side, std::size_t m, Relation leq,
                          std::vector<std::string> names = {}) {
  std::vector<std::vector<std::size_t>> act(S->size());
  for (auto& row : act) {
    row.resize(m);
    for (std::size_t a = 0; a < m; ++a) {
      row[a] = a;
    }
  }
  return sposet::make_sposet(std::move(S), side, std::move(act), std::move(leq),
                             std::move(names));
}

//! Two-element chain b < a over the trivial monoid (element 0 is the top).
inline SPoset chain2() {
  return plain_poset(trivial_monoid(), Side::left, 2, order_from(2, {{1, 0}}),
                     {"a", "b"});
}

//! Two-element antichain over the trivial monoid.
inline SPoset antichain2() {
  return plain_poset(trivial_monoid(), Side::left, 2, discrete(2), {"a", "b"});
}

}  // namespace fixtures
#endif  // SPOSET_TESTS_FIXTURES_HPP_
