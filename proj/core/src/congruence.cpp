#include "sposet/congruence.hpp"

#include <stdexcept>

namespace sposet {

QuotientSPoset order_congruence(SPoset const&                                           B,
                                std::vector<std::pair<std::size_t, std::size_t>> const& R) {
  std::size_t const m = B.size();
  std::size_t const n = B.monoid()->size();

  Relation Q = B.order();
  for (auto const& [a, b] : R) {
    if (a >= m || b >= m) {
      throw std::invalid_argument("order_congruence: relation pair out of range");
    }
    Q.set(a, b);
  }
  Q.reflexive_close();

  // Alternate action-stability and transitivity until the fixpoint; both
  // steps only ever add pairs, so this terminates within m*m rounds.
  for (bool changed = true; changed;) {
    changed = false;
    Q.transitive_close();
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          if (Q(a, b) && !Q(B.act(s, a), B.act(s, b))) {
            Q.set(B.act(s, a), B.act(s, b));
            changed = true;
          }
        }
      }
    }
  }

  // Classes are the symmetric kernel; representatives keep first-seen order,
  // so class indices ascend with their least members.
  std::vector<std::size_t> class_of(m, m);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < m; ++a) {
    if (class_of[a] != m) {
      continue;
    }
    std::size_t const c = classes.size();
    classes.emplace_back();
    for (std::size_t b = a; b < m; ++b) {
      if (class_of[b] == m && Q(a, b) && Q(b, a)) {
        class_of[b] = c;
        classes[c].push_back(b);
      }
    }
  }

  std::size_t const k = classes.size();
  Relation leq(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      if (Q(classes[c][0], classes[d][0])) {
        leq.set(c, d);
      }
    }
  }
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(k));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < k; ++c) {
      act[s][c] = class_of[B.act(s, classes[c][0])];
    }
  }
  std::vector<std::string> names(k);
  for (std::size_t c = 0; c < k; ++c) {
    names[c] = "[" + B.name(classes[c][0]) + "]";
  }
  SPoset quotient(B.monoid(), B.side(), std::move(act), std::move(leq), std::move(names));
  return {B, std::move(quotient), std::move(class_of), std::move(classes), std::move(Q)};
}

bool check_universal_property(QuotientSPoset const&                                   q,
                              std::vector<std::pair<std::size_t, std::size_t>> const& R,
                              SPoset const&                                           C) {
  for (PoMap const& alpha : enumerate_pomorphisms(q.base, C)) {
    bool admissible = true;
    for (auto const& [a, b] : R) {
      if (!C.leq(alpha(a), alpha(b))) {
        admissible = false;
        break;
      }
    }
    if (!admissible) {
      continue;
    }
    std::size_t factorisations = 0;
    for (PoMap const& beta : enumerate_pomorphisms(q.quotient, C)) {
      bool matches = true;
      for (std::size_t a = 0; a < q.base.size() && matches; ++a) {
        matches = beta(q.class_of[a]) == alpha(a);
      }
      factorisations += matches;
    }
    if (factorisations != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace sposet
