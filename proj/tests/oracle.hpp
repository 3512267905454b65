#ifndef SPOSET_TESTS_ORACLE_HPP_
#define SPOSET_TESTS_ORACLE_HPP_

#include <cstddef>

#include "sposet/relation.hpp"
#include "sposet/sposet.hpp"

//! Independent brute-force re-derivations of values the library computes.
//!
//! These are deliberately coded against the definitions only, with
//! different search orders and a different deduplication strategy than the
//! library (raw generate-everything sweeps, identity anywhere, pairwise
//! isomorphism filtering) so that agreement is meaningful.
namespace oracle {

//! Number of pomonoids with n elements up to isomorphism.
std::size_t count_pomonoids(std::size_t n);

//! Same, restricted to the trivial (discrete) order.
std::size_t count_pomonoids_trivial_order(std::size_t n);

//! Number of S-posets with m elements on the given side up to isomorphism.
std::size_t count_sposets(sposet::PomonoidPtr const& S, std::size_t m, sposet::Side side);

//! The tensor preorder on raw pairs of A x B, computed as the transitive
//! closure of the product order together with both directions of every swap
//! edge (a.s, b) ~ (a, s.b).  Entry (a * |B| + b, a' * |B| + b').
sposet::Relation tensor_preorder(sposet::SPoset const& A, sposet::SPoset const& B);

}  // namespace oracle
#endif  // SPOSET_TESTS_ORACLE_HPP_
