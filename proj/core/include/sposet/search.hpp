#ifndef SPOSET_SEARCH_HPP_
#define SPOSET_SEARCH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sposet/pomonoid.hpp"
#include "sposet/sposet.hpp"

namespace sposet {

// ---------------------------------------------------------------------
// Enumeration up to isomorphism
// ---------------------------------------------------------------------

//! All pomonoids with n elements up to isomorphism (monoid isomorphism
//! preserving the order both ways).  The representative of each class has
//! the identity at index 0 and is the minimum of its class under the
//! canonical key (multiplication table, then order matrix, flattened);
//! output is sorted by that key.  Throws std::invalid_argument for n = 0
//! or n > 4 (the table odometer is not sized for more).
std::vector<Pomonoid> enumerate_pomonoids(std::size_t n);

//! All S-posets with m elements on the given side up to isomorphism
//! (action- and order-preserving bijections).  Representatives are minima
//! under the canonical key (action table, then order matrix, flattened
//! after relabelling); output is sorted by that key.  Throws
//! std::invalid_argument for m = 0 or m > 5.
std::vector<SPoset> enumerate_sposets(PomonoidPtr S, std::size_t m, Side side);

// ---------------------------------------------------------------------
// Class membership
// ---------------------------------------------------------------------

//! Every property of a left S-poset the toolkit can test membership in.
//! The first ten are the interpolation conditions; PWF/WF/PWPF/WPF are the
//! ideal-flatness classes (exact); Fr/Pr are freeness/projectivity (exact);
//! FlatBounded/PoFlatBounded stand in for flatness/po-flatness and mean
//! "no failure up to the skeleton bound" (sound for refuting, not for
//! certifying, the unbounded property).
enum class ClassId {
  P,
  E,
  SF,
  EP,
  Pw,
  W,
  U_literal,
  U_amended,
  PWP,
  PWPw,
  PWF,
  WF,
  PWPF,
  WPF,
  Fr,
  Pr,
  FlatBounded,
  PoFlatBounded,
};

std::string const&          class_id_name(ClassId cls);
ClassId                     class_id_from_name(std::string const& name);
std::vector<ClassId> const& all_class_ids();

//! Membership of a left S-poset in one class.  skeleton_bound caps the
//! flat-length of skeletons tried by the two bounded classes.
bool evaluate_class(SPoset const& B, ClassId cls, std::size_t skeleton_bound = 6);

// ---------------------------------------------------------------------
// Implication audit
// ---------------------------------------------------------------------

//! One audited implication "every member of `stronger` is a member of
//! `weaker`".
struct Arrow {
  ClassId stronger;
  ClassId weaker;

  bool operator==(Arrow const&) const = default;
  bool operator<(Arrow const& other) const {
    return stronger != other.stronger ? stronger < other.stronger : weaker < other.weaker;
  }
};

//! The audited arrows: the transitive closure of the known implication
//! digraph between these classes, computed over a node set that also
//! contains the never-evaluated intermediates (the subpullback conditions
//! WP and WP_w, and exact flatness/po-flatness).  Arrows are kept when the
//! source is exactly evaluable and the target is evaluable at least in
//! bounded form; composites through dropped nodes survive (for example
//! P implies PWP via WP).
std::vector<Arrow> const& audited_arrows();

struct AuditReport {
  std::size_t                             instances_checked = 0;
  //! Arrows with a family member in stronger \ weaker (there should be
  //! none), with the index of the first offending instance.
  std::vector<std::pair<Arrow, std::size_t>> violations;
  //! First family member in weaker \ stronger, per arrow that has one.
  std::map<Arrow, std::size_t>            strictness_witnesses;
  //! The enumerated family the indices refer to, in enumeration order.
  std::vector<SPoset>                     family;
};

//! Evaluate every class on every left S-poset with at most max_size
//! elements (up to isomorphism) and check every audited arrow.  With
//! jobs > 1 the per-instance class evaluations run on that many threads;
//! the report is identical to the single-threaded one.
AuditReport implication_audit(PomonoidPtr S, std::size_t max_size,
                              std::size_t skeleton_bound = 6, std::size_t jobs = 1);

//! Least enumerated left S-poset of size at most max_size that is in
//! `weaker` but not in `stronger`, if any.
std::optional<SPoset> counterexample_search(PomonoidPtr S, std::size_t max_size,
                                            ClassId stronger, ClassId weaker,
                                            std::size_t skeleton_bound = 6);

}  // namespace sposet
#endif  // SPOSET_SEARCH_HPP_
