#ifndef SPOSET_MORPHISM_HPP_
#define SPOSET_MORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sposet/sposet.hpp"

namespace sposet {

//! A map between S-poset carriers, stored as the image vector.  The source
//! and target are supplied at each call site; PoMap itself is plain data.
struct PoMap {
  std::vector<std::size_t> img;

  std::size_t operator()(std::size_t a) const {
    return img[a];
  }

  std::size_t size() const noexcept {
    return img.size();
  }

  bool operator==(PoMap const& other) const = default;
};

//! Classification of a map f : A -> B, strongest applicable kind.
//!
//!   none         not action-equivariant or not order-preserving
//!   pomorphism   action-equivariant and order-preserving
//!   embedding    pomorphism with a <= a' iff f(a) <= f(a')
//!   isomorphism  bijective embedding
enum class MapKind { none, pomorphism, embedding, isomorphism };

std::string const& map_kind_name(MapKind kind);

//! Classify f.  Throws std::invalid_argument if A and B have different
//! monoids or sides, or if f has the wrong dimensions / out-of-range images.
MapKind morphism_kind(SPoset const& A, SPoset const& B, PoMap const& f);

//! All pomorphisms A -> B in lexicographic order of their image vectors.
//! Exhaustive (|B|^|A| candidates) — fine at desk scale.
std::vector<PoMap> enumerate_pomorphisms(SPoset const& A, SPoset const& B);

//! An isomorphism A -> B if one exists (the lexicographically least one),
//! found by backtracking over bijections with order-degree pruning.
std::optional<PoMap> isomorphic(SPoset const& A, SPoset const& B);

//! A right ideal of S (a non-empty subset closed under right multiplication)
//! as a right S-poset together with its inclusion into the regular act.
struct RightIdeal {
  std::vector<std::size_t> elements;   // ascending indices into S
  SPoset                   act;        // the ideal as a right S-poset
  PoMap                    inclusion;  // into regular_act(S, right)
};

//! All right ideals of S, or only the principal ones aS (deduplicated),
//! ordered by (size, lexicographic on elements).
std::vector<RightIdeal> right_ideals(PomonoidPtr S, bool principal_only);

}  // namespace sposet
#endif  // SPOSET_MORPHISM_HPP_
