#ifndef SPOSET_CONGRUENCE_HPP_
#define SPOSET_CONGRUENCE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "sposet/morphism.hpp"
#include "sposet/sposet.hpp"

namespace sposet {

//! The quotient of an S-poset by the least order congruence containing a set
//! R of ordered pairs (a, b) read as "class(a) <= class(b)".
//!
//! Construction: Q is the least relation containing the carrier order and R
//! that is transitive and stable under the action (a Q b implies s·a Q s·b);
//! classes are the symmetric kernel Q ∩ Q⁻¹, and the quotient order is Q
//! factored through the classes.  Identified elements of R (listed in both
//! directions) therefore end up equal in the quotient.
struct QuotientSPoset {
  SPoset                                base;      // copy of the input poset
  SPoset                                quotient;  // the quotient S-poset
  std::vector<std::size_t>              class_of;  // projection: base -> quotient
  std::vector<std::vector<std::size_t>> classes;   // members per class, ascending
  Relation                              preorder;  // Q on the base carrier
};

//! Build the quotient of B by the order congruence generated by R.
//! Throws std::invalid_argument on out-of-range pairs.
QuotientSPoset order_congruence(SPoset const&                                        B,
                                std::vector<std::pair<std::size_t, std::size_t>> const& R);

//! Test the universal property of q against a concrete target C: for every
//! pomorphism α : base -> C with α(a) <= α(b) for all (a, b) in R, there is
//! exactly one pomorphism β : quotient -> C with β ∘ projection = α.
//! Exhaustive over enumerate_pomorphisms; C must share monoid and side.
bool check_universal_property(QuotientSPoset const&                                   q,
                              std::vector<std::pair<std::size_t, std::size_t>> const& R,
                              SPoset const&                                           C);

}  // namespace sposet
#endif  // SPOSET_CONGRUENCE_HPP_
