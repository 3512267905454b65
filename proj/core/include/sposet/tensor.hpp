#ifndef SPOSET_TENSOR_HPP_
#define SPOSET_TENSOR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sposet/congruence.hpp"
#include "sposet/morphism.hpp"
#include "sposet/sposet.hpp"

namespace sposet {

//! A skeleton: the coefficient sequence (s_1, t_1, ..., s_m, t_m) of a
//! tossing, stored flat.  A doubled skeleton carries a second half
//! (u_1, v_1, ..., u_n, v_n) for the return tossing.
//!
//! Throughout this project "length" bounds on skeletons count flat entries:
//! a length-m tossing has 2m entries, so the smallest single skeleton has 2
//! entries and the smallest doubled one 2 + 2 = 4.
struct Skeleton {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;  // empty for single skeletons

  bool doubled() const noexcept {
    return !second.empty();
  }

  //! Number of (s_i, t_i) pairs in the first half.
  std::size_t rows_first() const noexcept {
    return first.size() / 2;
  }

  std::size_t rows_second() const noexcept {
    return second.size() / 2;
  }

  std::size_t flat_length() const noexcept {
    return first.size() + second.size();
  }

  std::size_t s1(std::size_t i) const {
    return first[2 * i];
  }
  std::size_t t1(std::size_t i) const {
    return first[2 * i + 1];
  }
  std::size_t s2(std::size_t i) const {
    return second[2 * i];
  }
  std::size_t t2(std::size_t i) const {
    return second[2 * i + 1];
  }

  //! Each half must have positive even length; entries must be < monoid size.
  void check(std::size_t monoid_size) const;

  bool operator==(Skeleton const& other) const = default;
  bool operator<(Skeleton const& other) const;
};

//! All skeletons over a monoid of the given size with flat_length <=
//! max_flat_len, ordered by (flat length, first-half length, lexicographic
//! entries).  With doubled = false only single skeletons are produced.
std::vector<Skeleton> enumerate_skeletons(std::size_t monoid_size,
                                          std::size_t max_flat_len,
                                          bool        doubled);

//! A tossing certificate witnessing (a, b) <= (a', b') in A ⊗ B — or, when
//! doubled, equality — via the scheme
//!
//!     b       <= s_1 b_1
//!     a  s_1  <= a_2 t_1        t_1 b_1 <= s_2 b_2
//!     a_2 s_2 <= a_3 t_2        t_2 b_2 <= s_3 b_3
//!        ...                        ...
//!     a_m s_m <= a' t_m         t_m b_m <= b'
//!
//! (written for a right S-poset A and left S-poset B; a_1 = a and
//! a_{m+1} = a').  A doubled certificate carries a second such scheme from
//! (a', b') back to (a, b) with chains c_2..c_n / d_1..d_n.
struct TossingCertificate {
  Skeleton                  skeleton;
  std::vector<std::size_t>  a_chain;  // a_2, ..., a_m        (size m - 1)
  std::vector<std::size_t>  b_chain;  // b_1, ..., b_m        (size m)
  std::vector<std::size_t>  c_chain;  // c_2, ..., c_n        (doubled only)
  std::vector<std::size_t>  d_chain;  // d_1, ..., d_n        (doubled only)
  std::pair<std::size_t, std::size_t> from;  // (a, b)
  std::pair<std::size_t, std::size_t> to;    // (a', b')
  std::size_t               path_steps = 0;  // closure-path length that produced it
};

//! The tensor product A ⊗ B of a right S-poset A and a left S-poset B: the
//! product poset with trivial action, quotiented by the order congruence
//! generated by the swap pairs (a·s, b) ~ (a, s·b).
class TensorPoset {
 public:
  //! Throws std::invalid_argument unless A is right-sided, B left-sided,
  //! and both share the monoid.
  TensorPoset(SPoset A, SPoset B);

  SPoset const& left() const noexcept {
    return _A;
  }
  SPoset const& right() const noexcept {
    return _B;
  }

  std::size_t pair_index(std::size_t a, std::size_t b) const {
    return a * _B.size() + b;
  }

  std::size_t class_of(std::size_t a, std::size_t b) const {
    return _q.class_of[pair_index(a, b)];
  }

  std::size_t class_count() const noexcept {
    return _q.classes.size();
  }

  std::vector<std::vector<std::size_t>> const& classes() const noexcept {
    return _q.classes;
  }

  //! The generated preorder Q on raw pairs.
  Relation const& pair_preorder() const noexcept {
    return _q.preorder;
  }

  //! The induced partial order on tensor classes.
  Relation const& class_order() const noexcept {
    return _q.quotient.order();
  }

 private:
  SPoset         _A;
  SPoset         _B;
  QuotientSPoset _q;
};

TensorPoset tensor_product(SPoset const& A, SPoset const& B);

//! Whether a ⊗ b <= a' ⊗ b' in the tensor order.
bool tensor_leq(TensorPoset const& T, std::pair<std::size_t, std::size_t> p,
                std::pair<std::size_t, std::size_t> q);

//! Extract a tossing certificate for p <= q, or nullopt when the inequality
//! does not hold.  The certificate is obtained by unrolling a shortest
//! closure path from p to q and normalising it into the alternating scheme
//! (identity coefficients are inserted where the path deviates from strict
//! alternation).  p = q yields the length-1 certificate with skeleton (1,1).
std::optional<TossingCertificate> extract_tossing(TensorPoset const&                  T,
                                                  std::pair<std::size_t, std::size_t> p,
                                                  std::pair<std::size_t, std::size_t> q);

//! Extract a doubled certificate for class equality (both directions), or
//! nullopt when the classes differ.
std::optional<TossingCertificate> extract_double_tossing(TensorPoset const& T,
                                                         std::pair<std::size_t, std::size_t> p,
                                                         std::pair<std::size_t, std::size_t> q);

//! Re-check every inequality of a certificate against A and B.  Returns
//! false on any failed inequality; throws std::invalid_argument on
//! dimension or index mismatches (wrong chain sizes, out-of-range entries).
bool verify_tossing(SPoset const& A, SPoset const& B, TossingCertificate const& cert);

// ---------------------------------------------------------------------
// Skeleton formulas
// ---------------------------------------------------------------------

//! The quantifier-free / existential formulas attached to a skeleton S:
//!
//!   epsilon    right posets, all arguments given:
//!              x s_1 <= x_2 t_1 ∧ x_2 s_2 <= x_3 t_2 ∧ ... ∧ x_m s_m <= x' t_m
//!   theta      left posets, all arguments given:
//!              x <= s_1 x_1 ∧ t_1 x_1 <= s_2 x_2 ∧ ... ∧ t_m x_m <= x'
//!   delta      doubled S, args (x, x'): ∃ interpolants with
//!              epsilon_{S1}(x, ..., x') ∧ epsilon_{S2}(x', ..., x)
//!   gamma      doubled S, args (x, x'): ∃ interpolants with
//!              theta_{S1}(x, ..., x') ∧ theta_{S2}(x', ..., x)
//!   delta_leq  single S, args (x, x'): ∃ x_2..x_m epsilon_S(x, x_2..x_m, x')
//!   gamma_leq  single S, args (x, x'): ∃ x_1..x_m theta_S(x, x_1..x_m, x')
enum class SkeletonFormula { epsilon, theta, delta, gamma, delta_leq, gamma_leq };

struct FormulaResult {
  bool                     holds;
  std::vector<std::size_t> witness;  // interpolants for existential kinds
};

//! Evaluate a skeleton formula on X.  Arguments: epsilon takes m + 1 values,
//! theta m + 2, the rest exactly 2 (x, x').  Side and skeleton shape are
//! checked (epsilon/delta* need right X, theta/gamma* left; delta/gamma need
//! a doubled skeleton, the _leq forms a single one); throws on mismatch.
FormulaResult eval_skeleton_formula(SkeletonFormula kind, Skeleton const& sk,
                                    SPoset const& X, std::span<std::size_t const> args);

//! Whether the pairs p = (a, b), q = (a', b') over A x B are connected by
//! the skeleton: for a doubled skeleton, delta(a, a') in A and gamma(b, b')
//! in B (witnessing tensor equality); for a single one, delta_leq and
//! gamma_leq (witnessing tensor <=).
bool connected_by_skeleton(SPoset const& A, SPoset const& B,
                           std::pair<std::size_t, std::size_t> p,
                           std::pair<std::size_t, std::size_t> q, Skeleton const& sk);

//! The map f ⊗ B : src -> dst on tensor classes induced by a pomorphism
//! f : src.left() -> dst.left() (same right factor).  Throws if f is not a
//! pomorphism or the right factors differ.  The result is total and
//! well-defined; injectivity or order-embedding are for the caller to test.
PoMap induced_tensor_map(TensorPoset const& src, TensorPoset const& dst, PoMap const& f);

}  // namespace sposet
#endif  // SPOSET_TENSOR_HPP_
