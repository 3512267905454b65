#ifndef SPOSET_STRUCTURE_HPP_
#define SPOSET_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sposet/sposet.hpp"

namespace sposet {

//! Decomposition of a left S-poset into its connected components — the
//! classes of the equivalence generated by comparability together with
//! a ~ s·a — plus, per component, a cyclic-generator witness when one
//! exists: an idempotent e and an element c with S·c = component and
//! s·e <= t·e iff s·c <= t·c for all s, t (so s·e -> s·c is an isomorphism
//! from S·e onto the component).
struct Decomposition {
  struct Generator {
    std::size_t idempotent;  // e
    std::size_t element;     // c, the image of e
  };
  std::vector<std::vector<std::size_t>> components;  // ascending members
  std::vector<std::optional<Generator>> generators;  // per component
};

//! Decompose a left S-poset.  Components are ordered by least member;
//! generator witnesses, where present, are the lexicographically least
//! (e, c) pair that works.
Decomposition decompose(SPoset const& A);

//! A left S-poset is projective iff it is a disjoint union of pairwise
//! incomparable copies of cyclic acts S·e on idempotents e — that is, iff
//! every component of the decomposition has a generator witness.
struct ProjectivityResult {
  bool          projective;
  Decomposition decomposition;
};

ProjectivityResult is_projective(SPoset const& A);

//! A left S-poset is free iff every component is isomorphic to S itself via
//! s -> s·c with s <= t iff s·c <= t·c (the e = 1 case above); the basis
//! size is then the number of components.
struct FreenessResult {
  bool          free;
  std::size_t   basis;  // number of components when free, else 0
  Decomposition decomposition;
};

FreenessResult is_free(SPoset const& A);

}  // namespace sposet
#endif  // SPOSET_STRUCTURE_HPP_
