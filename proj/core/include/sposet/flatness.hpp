#ifndef SPOSET_FLATNESS_HPP_
#define SPOSET_FLATNESS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sposet/congruence.hpp"
#include "sposet/tensor.hpp"

namespace sposet {

//! The standard quotient attached to a skeleton: the free right S-poset on
//! generators x, x_2..x_m, (y_2..y_n,) x', quotiented by the relation pairs
//!
//!   (x s_1, x_2 t_1), (x_2 s_2, x_3 t_2), ..., (x_m s_m, x' t_m)
//!
//! and, for a doubled skeleton (second half u_j, v_j), additionally
//!
//!   (x' u_1, y_2 v_1), (y_2 u_2, y_3 v_2), ..., (y_n u_n, x v_n).
//!
//! By construction delta_leq (single) resp. delta (doubled) holds between
//! the marked classes [x], [x'] in the quotient.
struct StandardQuotient {
  Skeleton                                         skeleton;
  SPoset                                           free;       // the free right S-poset
  std::vector<std::pair<std::size_t, std::size_t>> relations;  // index pairs in free
  QuotientSPoset                                   quotient;
  std::size_t                                      marked_x;   // class of x·1
  std::size_t                                      marked_xp;  // class of x'·1
  SPoset                                           sub;        // [x]S ∪ [x']S
  std::vector<std::size_t>                         sub_carrier;  // quotient indices
  std::size_t                                      sub_x;      // position of [x] in sub
  std::size_t                                      sub_xp;     // position of [x'] in sub
};

StandardQuotient build_standard_quotient(PomonoidPtr S, Skeleton const& sk);

//! All standard quotients for the skeletons over S up to max_flat_len
//! (doubled or single), in enumeration order.  Built once and shared by the
//! bounded flatness checks and the audit.
class StandardQuotientFamily {
 public:
  StandardQuotientFamily(PomonoidPtr S, std::size_t max_flat_len, bool doubled);

  std::vector<StandardQuotient> const& quotients() const noexcept {
    return _quotients;
  }

  std::size_t max_flat_len() const noexcept {
    return _max_flat_len;
  }

  bool doubled() const noexcept {
    return _doubled;
  }

 private:
  std::size_t                   _max_flat_len;
  bool                          _doubled;
  std::vector<StandardQuotient> _quotients;
};

//! The ideal-embedding flatness properties of a left S-poset B, decided
//! exactly by computing every induced map I ⊗ B -> S ⊗ B:
//!
//!   PWF    (principally weakly flat)     injective for principal ideals
//!   WF     (weakly flat)                 injective for all right ideals
//!   PWPF   (principally weakly po-flat)  an order-embedding for principal ideals
//!   WPF    (weakly po-flat)              an order-embedding for all right ideals
enum class IdealVariant { PWF, WF, PWPF, WPF };

std::string const& ideal_variant_name(IdealVariant v);

struct FlatnessVerdict {
  enum class Status { holds, bounded_holds, fails };

  Status      status;
  std::size_t bound = 0;  // flat-length bound for bounded_holds / fails-by-skeleton
  std::string detail;     // human-readable description of the failing instance
  std::optional<Skeleton>                 failing_skeleton;
  std::optional<std::vector<std::size_t>> failing_instance;

  bool ok() const noexcept {
    return status != Status::fails;
  }
};

FlatnessVerdict check_ideal_flatness(SPoset const& B, IdealVariant v);

//! Bounded flatness via replacement tossings: for every doubled skeleton of
//! flat length <= max_len (single skeleton when po = true) and every pair
//! b, b' of B with gamma (resp. gamma_leq) — equivalently, whenever the
//! standard quotient connects ([x], b) and ([x'], b') — check that the
//! marked pairs are already connected (resp. <=) in ([x]S ∪ [x']S) ⊗ B.
//! A failure refutes flatness (resp. po-flatness) outright; success is a
//! bounded verdict only.  Requires max_len >= 4 (doubled) / >= 2 (single).
FlatnessVerdict check_flat_bounded(SPoset const& B, bool po, std::size_t max_len);

//! Same, reusing a precomputed family (family.doubled() must be !po).
FlatnessVerdict check_flat_bounded(SPoset const& B, bool po,
                                   StandardQuotientFamily const& family);

//! Exploratory search for replacement skeletons: all skeletons T of flat
//! length <= bound (same shape as sk) that connect the marked pairs over the
//! sub-poset [x]S ∪ [x']S and some B of the family whenever the standard
//! quotient of sk connects them.  Results are family-relative: a different
//! family may need different skeletons.  Ordered by (length, lex), deduped.
std::vector<Skeleton> replacement_skeleton_search(PomonoidPtr S, Skeleton const& sk,
                                                  std::span<SPoset const> family,
                                                  std::size_t             bound);

}  // namespace sposet
#endif  // SPOSET_FLATNESS_HPP_
