#ifndef SPOSET_SPOSET_HPP_
#define SPOSET_SPOSET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sposet/pomonoid.hpp"
#include "sposet/relation.hpp"

namespace sposet {

enum class Side { left, right };

std::string const& side_name(Side side);

//! A finite S-poset: a partially ordered set with a monotone action of a
//! pomonoid S on the chosen side.
//!
//! The action table is indexed monoid-element-first: act(s, a) is s·a for a
//! left S-poset and a·s for a right one.  Like Pomonoid, the type is plain
//! data; validate_sposet checks the axioms
//!   1·a = a,
//!   s·(t·a) = (st)·a   (left; mirrored for right),
//!   a <= b  implies  s·a <= s·b,
//!   s <= t  implies  s·a <= t·a,
//! plus partial-order axioms for the carrier order.
class SPoset {
 public:
  //! \p act has one row per monoid element, one column per carrier element.
  //! Throws std::invalid_argument on dimension or index mismatches.
  SPoset(PomonoidPtr                           S,
         Side                                  side,
         std::vector<std::vector<std::size_t>> act,
         Relation                              leq,
         std::vector<std::string>              names = {});

  PomonoidPtr const& monoid() const noexcept {
    return _S;
  }

  Side side() const noexcept {
    return _side;
  }

  std::size_t size() const noexcept {
    return _m;
  }

  //! s·a for a left poset, a·s for a right one.
  std::size_t act(std::size_t s, std::size_t a) const {
    return _act[s][a];
  }

  bool leq(std::size_t a, std::size_t b) const {
    return _leq(a, b);
  }

  Relation const& order() const noexcept {
    return _leq;
  }

  std::vector<std::vector<std::size_t>> const& action() const noexcept {
    return _act;
  }

  std::string const& name(std::size_t a) const {
    return _names[a];
  }

  std::vector<std::string> const& names() const noexcept {
    return _names;
  }

  std::size_t index_of(std::string const& name) const;

  //! Same monoid object, side, action and order (names ignored).
  bool operator==(SPoset const& other) const;

 private:
  PomonoidPtr                           _S;
  Side                                  _side;
  std::size_t                           _m;
  std::vector<std::vector<std::size_t>> _act;
  Relation                              _leq;
  std::vector<std::string>              _names;
};

//! Check the S-poset axioms (the monoid is assumed validated).
//!
//! Violation witnesses: "identity-action" -> {a}; "associativity-action" ->
//! {s, t, a}; "reflexivity"/"antisymmetry"/"transitivity" as for pomonoids;
//! "monotone-action" -> {s, a, b} (a <= b but s·a <= s·b fails);
//! "monotone-coefficient" -> {s, t, a} (s <= t but s·a <= t·a fails).
ValidationReport validate_sposet(SPoset const& A);

//! Construct and validate, throwing std::invalid_argument on failure.
//! Whether two monoid handles denote the same pomonoid: the same object,
//! or equal tables and order (a document loaded twice compares equal; names
//! are ignored).  Operations combining two S-posets use this test.
bool same_monoid(PomonoidPtr const& a, PomonoidPtr const& b);

SPoset make_sposet(PomonoidPtr                           S,
                   Side                                  side,
                   std::vector<std::vector<std::size_t>> act,
                   Relation                              leq,
                   std::vector<std::string>              names = {});

// ---------------------------------------------------------------------
// Standard constructions
// ---------------------------------------------------------------------

//! S acting on itself (the regular act), order inherited from S.
SPoset regular_act(PomonoidPtr S, Side side);

//! The one-element S-poset Θ.
SPoset one_element_act(PomonoidPtr S, Side side);

//! The sub-S-poset on \p carrier (indices into A, which must be closed under
//! the action; throws otherwise).  Carrier order is induced.  The i-th
//! element of the result is carrier[i]; use the returned poset together with
//! \p carrier as the inclusion map.
SPoset sub_act(SPoset const& A, std::vector<std::size_t> const& carrier);

//! Disjoint union with no order between parts.  All parts must share the
//! monoid and side.  Element k of part i becomes offset(i) + k.
SPoset disjoint_union(std::span<SPoset const> parts);

//! Free S-poset on k generators: the disjoint union of k pairwise
//! incomparable copies of the regular act.  Generator g is element
//! g * |S| + one; element g * |S| + s is generator g acted on by s.
SPoset free_act(PomonoidPtr S, Side side, std::size_t k);

//! The cyclic sub-act S·g (left) or g·S (right) of the regular act,
//! as a pair (act, carrier elements of S ascending).
std::pair<SPoset, std::vector<std::size_t>> cyclic_act(PomonoidPtr S, Side side, std::size_t g);

//! The product poset A × B with the trivial S-action (every s acts as the
//! identity) — the ambient poset for tensor products.  Pair (a, b) is
//! element a * |B| + b.
SPoset trivial_product_act(SPoset const& A, SPoset const& B);

}  // namespace sposet
#endif  // SPOSET_SPOSET_HPP_
