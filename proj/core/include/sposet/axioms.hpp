#ifndef SPOSET_AXIOMS_HPP_
#define SPOSET_AXIOMS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sposet/pomonoid.hpp"
#include "sposet/sposet.hpp"

namespace sposet {

//! A term of the one-sorted action language: a variable with a word of
//! monoid coefficients applied to it.  An empty word is the bare variable.
//! On a left S-poset the word [s, t] applied to x reads s·(t·x); on a right
//! one it reads (x·s)·t.  Single-letter words cover every atom except the
//! action-associativity axioms, which need genuine composites.
struct Term {
  std::vector<std::size_t> word;
  std::size_t              var;

  bool operator==(Term const& other) const = default;
};

//! A first-order sentence over the action language with atoms t1 <= t2 and
//! t1 = t2.  Immutable tree with structural sharing; build via the static
//! factories.  Variables are numeric ids (printed x, y, z, w, v4, v5, ...).
class Sentence {
 public:
  enum class Kind { atom, negation, conjunction, disjunction, implication, forall, exists };

  static Sentence leq(Term lhs, Term rhs);
  static Sentence eq(Term lhs, Term rhs);
  static Sentence negation(Sentence inner);
  static Sentence conjunction(std::vector<Sentence> parts);  // empty = true
  static Sentence disjunction(std::vector<Sentence> parts);  // empty = false
  static Sentence implication(Sentence lhs, Sentence rhs);
  static Sentence forall(std::size_t var, Sentence body);
  static Sentence exists(std::size_t var, Sentence body);

  Kind kind() const;

  //! Stable textual form, e.g.
  //!   forall x. forall y. ((x <= y) -> (e*x <= e*y))
  //! Coefficient words print with '*' between letters and before the
  //! variable; conjunction/disjunction as (a & b & ...) / (a | b | ...);
  //! negation as !(a).
  std::string to_string(Pomonoid const& S) const;

  // Accessors (valid for the matching kind only).
  Term const&                  lhs() const;
  Term const&                  rhs() const;
  bool                         is_equality() const;
  std::size_t                  var() const;
  std::vector<Sentence> const& parts() const;

 private:
  struct Node;
  std::shared_ptr<Node const> _node;

  explicit Sentence(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
};

//! Evaluate a closed sentence on a finite S-poset by exhaustive quantifier
//! expansion.  Throws std::invalid_argument on free variables or coefficient
//! indices outside the monoid.
bool fo_eval(SPoset const& A, Sentence const& phi);

// ---------------------------------------------------------------------
// Replaceability sets over the monoid
// ---------------------------------------------------------------------

//! The relation sets of a pair (s, t):
//!   R<=(s, t) = {(u, v) : su <= tv}      (closed under the diagonal right
//!                                         action (u, v) -> (uw, vw))
//!   r<=(s, t) = {u : su <= tu}
//! together with minimal generating sets under right division — one
//! representative (least in lexicographic order) per maximal class of the
//! divisibility quasi-order x ⊑ y iff x ∈ yS (componentwise for pairs, with
//! a single shared w).
struct WitnessSets {
  std::vector<std::pair<std::size_t, std::size_t>> pair_set;
  std::vector<std::pair<std::size_t, std::size_t>> pair_generators;
  std::vector<std::size_t>                         elem_set;
  std::vector<std::size_t>                         elem_generators;
};

WitnessSets relation_sets(Pomonoid const& S, std::size_t s, std::size_t t);

//! Domination quasi-orders used by the weak-order axiom schemes.  All three
//! are reflexive (h = 1) and transitive (compose the h's), so a minimal
//! dominating set is one representative per maximal class:
//!
//!   Pw    on R<=(s, t):        (x, y) ⊑ (u, v) iff ∃h: x <= uh and vh <= y
//!   PWPw  the same on R<=(s, s) (t is ignored)
//!   W     on {(p, q) : p ∈ sS, q ∈ tS, p <= q}:
//!                              (p, q) ⊑ (p', q') iff ∃z: p <= p'z and q'z <= q
enum class DominationKind { Pw, PWPw, W };

struct DominatingSet {
  DominationKind                                   kind;
  std::vector<std::pair<std::size_t, std::size_t>> pool;   // the dominated set
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // minimal dominating subset
  bool                                             empty_pool = false;
};

DominatingSet dominating_set(Pomonoid const& S, DominationKind kind, std::size_t s,
                             std::size_t t);

// ---------------------------------------------------------------------
// Axiom schemes
// ---------------------------------------------------------------------

//! The finitely many axiom schemes this toolkit can emit for a finite
//! pomonoid S.  PiS is the base theory of left S-posets; the others
//! axiomatise the class of left S-posets satisfying the matching
//! interpolation condition (EP, Pw, PWP, PWPw, W).
enum class AxiomClass { PiS, EP, Pw, PWP, PWPw, W };

std::string const& axiom_class_name(AxiomClass which);
AxiomClass         axiom_class_from_name(std::string const& name);

struct AxiomSet {
  AxiomClass            which;
  std::vector<Sentence> sentences;
  //! True when some EP sentence chose its negative branch only because the
  //! bounded witness search (over posets of size <= vacuity_bound) found
  //! nothing; such emissions are correct relative to that bound.
  bool        bound_relative = false;
  std::size_t vacuity_bound  = 0;
};

//! Emit the axiom scheme.  For EP, a pair (s, t) is non-vacuous exactly
//! when some poset in the class has an element with sa <= ta; this is
//! decided exactly when r<=(s, t) is non-empty (S itself witnesses) or
//! R<=(s, t) is empty (no witness can exist), and by a bounded search over
//! enumerated EP posets otherwise.
AxiomSet emit_axioms(PomonoidPtr S, AxiomClass which, std::size_t vacuity_bound = 4);

// ---------------------------------------------------------------------
// e-good factorisations
// ---------------------------------------------------------------------

//! Whether the factorisation a = x y is e-good through x: there are no
//! w, z with y = w z, e = x w and S w = S e (equal principal left ideals).
//! Throws std::invalid_argument unless a = x y and e is idempotent.
bool e_good_check(Pomonoid const& S, std::size_t a, std::size_t x, std::size_t y,
                  std::size_t e);

//! For every non-identity idempotent e, find a smallest set f such that
//! every a in S has an e-good factorisation through some x in f (ties
//! broken lexicographically).  Fails for a given e exactly when some a has
//! no e-good factorisation at all.
struct EGoodReport {
  struct PerIdempotent {
    std::size_t                             e;
    std::vector<std::vector<std::size_t>>   factor_table;  // per a: all usable x
    std::optional<std::vector<std::size_t>> minimal_f;
    std::optional<std::size_t>              failing_a;
  };
  bool                       holds;
  std::vector<PerIdempotent> details;
};

EGoodReport star_condition(PomonoidPtr S);

}  // namespace sposet
#endif  // SPOSET_AXIOMS_HPP_
