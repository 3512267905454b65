#ifndef SPOSET_CONDITIONS_HPP_
#define SPOSET_CONDITIONS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sposet/sposet.hpp"

namespace sposet {

//! Interpolation conditions on a left S-poset B.  In all of the following
//! b, b', b'' range over B, the remaining variables over S, and "p in sS"
//! means p is in the right ideal sS.
//!
//!   P     sb <= s'b'  =>  ∃ b'', u, u':  b = ub'', b' = u'b'', su <= s'u'
//!   E     sb <= s'b   =>  ∃ b'', u:      b = ub'', su <= s'u
//!   SF    P and E
//!   EP    sb <= s'b   =>  ∃ b'', u, u':  b = ub'' = u'b'', su <= s'u'
//!   Pw    sb <= s'b'  =>  ∃ b'', u, u':  b <= ub'', u'b'' <= b', su <= s'u'
//!   W     sb <= s'b'  =>  ∃ b'', p in sS, p' in s'S:
//!                             p <= p', sb <= pb'', p'b'' <= s'b'
//!   PWP   sb <= sb'   =>  ∃ b'', u, u':  b = ub'', b' = u'b'', su <= su'
//!   PWPw  sb <= sb'   =>  ∃ b'', u, u':  b <= ub'', u'b'' <= b', su <= su'
//!
//! Condition (U) is implemented in two readings that differ in the premise:
//!
//!   U_literal  sb = sb'   =>  ∃ b'', p in sS, p' in s'S:
//!                                 p <= p', sb = pb'' = p'b'' = s'b'
//!   U_amended  sb = s'b'  =>  same conclusion
//!
//! (in U_literal the universally quantified s' does not occur in the
//! premise; U_amended repairs that).  Both are checked exactly as stated.
enum class Condition { P, E, SF, EP, Pw, W, U_literal, U_amended, PWP, PWPw };

std::string const& condition_name(Condition c);

//! Parse "P", "E", "SF", "EP", "Pw", "W", "U", "Uam", "PWP", "PWPw"
//! ("U" = U_literal, "Uam" = U_amended).  Throws on unknown names.
Condition condition_from_name(std::string const& name);

std::vector<Condition> const& all_conditions();

//! Outcome of one condition check.  Premise tuples follow the quantifier
//! order of the definition above: (s, s', b, b') for P/Pw/W/U, (s, s', b)
//! for E/EP, (s, b, b') for PWP/PWPw.  Witness tuples are (b'', u, u') —
//! (b'', u) for E, (b'', p, p') for W/U — chosen lexicographically least.
//! For SF the tables of P and E are concatenated (distinguishable by arity).
struct Verdict {
  bool                                  holds;
  std::optional<std::vector<std::size_t>> counterexample;  // first failing premise
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witnesses;
};

//! Exhaustively check one condition on a left S-poset (throws on a right
//! one).  Every premise instance gets either a witness table entry or, for
//! the first failure, the counterexample.
Verdict check_condition(SPoset const& B, Condition c);

//! All condition verdicts at once (holds-bit only), as a stable signature.
std::map<Condition, bool> condition_signature(SPoset const& B);

}  // namespace sposet
#endif  // SPOSET_CONDITIONS_HPP_
