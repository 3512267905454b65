#include "sposet/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sposet/conditions.hpp"
#include "sposet/search.hpp"

namespace sposet {

struct Sentence::Node {
  Kind                  kind;
  Term                  lhs{};
  Term                  rhs{};
  bool                  equality = false;
  std::size_t           var      = 0;
  std::vector<Sentence> parts{};
};

namespace {

std::string var_name(std::size_t var) {
  static char const* kNames[] = {"x", "y", "z", "w"};
  if (var < 4) return kNames[var];
  std::ostringstream out;
  out << "v" << var;
  return out.str();
}

std::string term_to_string(Pomonoid const& S, Term const& term) {
  std::ostringstream out;
  for (std::size_t letter : term.word) out << S.name(letter) << "*";
  out << var_name(term.var);
  return out.str();
}

}  // namespace

Sentence Sentence::leq(Term lhs, Term rhs) {
  auto node      = std::make_shared<Node>();
  node->kind     = Kind::atom;
  node->lhs      = std::move(lhs);
  node->rhs      = std::move(rhs);
  node->equality = false;
  return Sentence(std::move(node));
}

Sentence Sentence::eq(Term lhs, Term rhs) {
  auto node      = std::make_shared<Node>();
  node->kind     = Kind::atom;
  node->lhs      = std::move(lhs);
  node->rhs      = std::move(rhs);
  node->equality = true;
  return Sentence(std::move(node));
}

Sentence Sentence::negation(Sentence inner) {
  auto node  = std::make_shared<Node>();
  node->kind = Kind::negation;
  node->parts.push_back(std::move(inner));
  return Sentence(std::move(node));
}

Sentence Sentence::conjunction(std::vector<Sentence> parts) {
  auto node   = std::make_shared<Node>();
  node->kind  = Kind::conjunction;
  node->parts = std::move(parts);
  return Sentence(std::move(node));
}

Sentence Sentence::disjunction(std::vector<Sentence> parts) {
  auto node   = std::make_shared<Node>();
  node->kind  = Kind::disjunction;
  node->parts = std::move(parts);
  return Sentence(std::move(node));
}

Sentence Sentence::implication(Sentence lhs, Sentence rhs) {
  auto node  = std::make_shared<Node>();
  node->kind = Kind::implication;
  node->parts.push_back(std::move(lhs));
  node->parts.push_back(std::move(rhs));
  return Sentence(std::move(node));
}

Sentence Sentence::forall(std::size_t var, Sentence body) {
  auto node  = std::make_shared<Node>();
  node->kind = Kind::forall;
  node->var  = var;
  node->parts.push_back(std::move(body));
  return Sentence(std::move(node));
}

Sentence Sentence::exists(std::size_t var, Sentence body) {
  auto node  = std::make_shared<Node>();
  node->kind = Kind::exists;
  node->var  = var;
  node->parts.push_back(std::move(body));
  return Sentence(std::move(node));
}

Sentence::Kind Sentence::kind() const { return _node->kind; }

Term const& Sentence::lhs() const {
  if (_node->kind != Kind::atom) throw std::logic_error("lhs(): not an atom");
  return _node->lhs;
}

Term const& Sentence::rhs() const {
  if (_node->kind != Kind::atom) throw std::logic_error("rhs(): not an atom");
  return _node->rhs;
}

bool Sentence::is_equality() const {
  if (_node->kind != Kind::atom) throw std::logic_error("is_equality(): not an atom");
  return _node->equality;
}

std::size_t Sentence::var() const {
  if (_node->kind != Kind::forall && _node->kind != Kind::exists)
    throw std::logic_error("var(): not a quantifier");
  return _node->var;
}

std::vector<Sentence> const& Sentence::parts() const { return _node->parts; }

std::string Sentence::to_string(Pomonoid const& S) const {
  std::ostringstream out;
  switch (_node->kind) {
    case Kind::atom:
      out << term_to_string(S, _node->lhs) << (_node->equality ? " = " : " <= ")
          << term_to_string(S, _node->rhs);
      break;
    case Kind::negation:
      out << "!(" << _node->parts[0].to_string(S) << ")";
      break;
    case Kind::conjunction:
      if (_node->parts.empty()) {
        out << "true";
      } else {
        out << "(";
        for (std::size_t i = 0; i < _node->parts.size(); ++i) {
          if (i) out << " & ";
          out << _node->parts[i].to_string(S);
        }
        out << ")";
      }
      break;
    case Kind::disjunction:
      if (_node->parts.empty()) {
        out << "false";
      } else {
        out << "(";
        for (std::size_t i = 0; i < _node->parts.size(); ++i) {
          if (i) out << " | ";
          out << _node->parts[i].to_string(S);
        }
        out << ")";
      }
      break;
    case Kind::implication:
      out << "(" << _node->parts[0].to_string(S) << " -> " << _node->parts[1].to_string(S)
          << ")";
      break;
    case Kind::forall:
      out << "forall " << var_name(_node->var) << ". " << _node->parts[0].to_string(S);
      break;
    case Kind::exists:
      out << "exists " << var_name(_node->var) << ". " << _node->parts[0].to_string(S);
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------

namespace {

using Env = std::vector<std::optional<std::size_t>>;

std::size_t eval_term(SPoset const& A, Term const& term, Env const& env) {
  if (term.var >= env.size() || !env[term.var])
    throw std::invalid_argument("fo_eval: free variable " + var_name(term.var));
  std::size_t       value = *env[term.var];
  Pomonoid const&   S     = *A.monoid();
  for (std::size_t letter : term.word)
    if (letter >= S.size())
      throw std::invalid_argument("fo_eval: coefficient index out of range");
  if (A.side() == Side::left) {
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) value = A.act(*it, value);
  } else {
    for (std::size_t letter : term.word) value = A.act(letter, value);
  }
  return value;
}

bool eval_sentence(SPoset const& A, Sentence const& phi, Env& env) {
  switch (phi.kind()) {
    case Sentence::Kind::atom: {
      std::size_t lhs = eval_term(A, phi.lhs(), env);
      std::size_t rhs = eval_term(A, phi.rhs(), env);
      return phi.is_equality() ? lhs == rhs : A.leq(lhs, rhs);
    }
    case Sentence::Kind::negation:
      return !eval_sentence(A, phi.parts()[0], env);
    case Sentence::Kind::conjunction:
      for (Sentence const& part : phi.parts())
        if (!eval_sentence(A, part, env)) return false;
      return true;
    case Sentence::Kind::disjunction:
      for (Sentence const& part : phi.parts())
        if (eval_sentence(A, part, env)) return true;
      return false;
    case Sentence::Kind::implication:
      return !eval_sentence(A, phi.parts()[0], env) || eval_sentence(A, phi.parts()[1], env);
    case Sentence::Kind::forall:
    case Sentence::Kind::exists: {
      bool const  is_forall = phi.kind() == Sentence::Kind::forall;
      std::size_t var       = phi.var();
      if (var >= env.size()) env.resize(var + 1);
      std::optional<std::size_t> saved = env[var];
      bool                       result = is_forall;
      for (std::size_t value = 0; value < A.size(); ++value) {
        env[var] = value;
        bool inner = eval_sentence(A, phi.parts()[0], env);
        if (is_forall && !inner) {
          result = false;
          break;
        }
        if (!is_forall && inner) {
          result = true;
          break;
        }
      }
      env[var] = saved;
      return result;
    }
  }
  throw std::logic_error("eval_sentence: unreachable");
}

}  // namespace

bool fo_eval(SPoset const& A, Sentence const& phi) {
  Env env;
  return eval_sentence(A, phi, env);
}

// ---------------------------------------------------------------------
// Relation sets and domination
// ---------------------------------------------------------------------

namespace {

//! One representative (least index) per maximal class of a reflexive,
//! transitive relation `below` on {0, ..., k-1}.
template <typename Below>
std::vector<std::size_t> maximal_class_reps(std::size_t k, Below&& below) {
  std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rel[i][j] = below(i, j) ? 1 : 0;
  std::vector<char> maximal(k, 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (rel[i][j] && !rel[j][i]) maximal[i] = 0;
  std::vector<std::size_t> reps;
  std::vector<char>        claimed(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!maximal[i] || claimed[i]) continue;
    reps.push_back(i);
    for (std::size_t j = i + 1; j < k; ++j)
      if (maximal[j] && rel[i][j] && rel[j][i]) claimed[j] = 1;
  }
  return reps;
}

void check_element(Pomonoid const& S, std::size_t s, char const* what) {
  if (s >= S.size())
    throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace

WitnessSets relation_sets(Pomonoid const& S, std::size_t s, std::size_t t) {
  check_element(S, s, "relation_sets: s");
  check_element(S, t, "relation_sets: t");
  std::size_t const n = S.size();
  WitnessSets       out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (S.leq(S.mul(s, u), S.mul(t, v))) out.pair_set.emplace_back(u, v);
  for (std::size_t u = 0; u < n; ++u)
    if (S.leq(S.mul(s, u), S.mul(t, u))) out.elem_set.push_back(u);

  auto pair_divides = [&](std::size_t i, std::size_t j) {
    auto const& [xi, yi] = out.pair_set[i];
    auto const& [xj, yj] = out.pair_set[j];
    for (std::size_t w = 0; w < n; ++w)
      if (S.mul(xj, w) == xi && S.mul(yj, w) == yi) return true;
    return false;
  };
  for (std::size_t i : maximal_class_reps(out.pair_set.size(), pair_divides))
    out.pair_generators.push_back(out.pair_set[i]);

  auto elem_divides = [&](std::size_t i, std::size_t j) {
    for (std::size_t w = 0; w < n; ++w)
      if (S.mul(out.elem_set[j], w) == out.elem_set[i]) return true;
    return false;
  };
  for (std::size_t i : maximal_class_reps(out.elem_set.size(), elem_divides))
    out.elem_generators.push_back(out.elem_set[i]);
  return out;
}

DominatingSet dominating_set(Pomonoid const& S, DominationKind kind, std::size_t s,
                             std::size_t t) {
  check_element(S, s, "dominating_set: s");
  check_element(S, t, "dominating_set: t");
  std::size_t const n = S.size();
  DominatingSet     out;
  out.kind = kind;
  switch (kind) {
    case DominationKind::Pw:
      out.pool = relation_sets(S, s, t).pair_set;
      break;
    case DominationKind::PWPw:
      out.pool = relation_sets(S, s, s).pair_set;
      break;
    case DominationKind::W: {
      std::set<std::pair<std::size_t, std::size_t>> pool;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          std::size_t p = S.mul(s, u);
          std::size_t q = S.mul(t, v);
          if (S.leq(p, q)) pool.emplace(p, q);
        }
      out.pool.assign(pool.begin(), pool.end());
      break;
    }
  }
  out.empty_pool = out.pool.empty();
  // In all three cases (x, y) is dominated by (u, v) iff for some h,
  // x <= u h and v h <= y; a dominating witness can then stand in for the
  // dominated one by rescaling the interpolant with h.
  auto below = [&](std::size_t i, std::size_t j) {
    auto const& [x, y] = out.pool[i];
    auto const& [u, v] = out.pool[j];
    for (std::size_t h = 0; h < n; ++h)
      if (S.leq(x, S.mul(u, h)) && S.leq(S.mul(v, h), y)) return true;
    return false;
  };
  for (std::size_t i : maximal_class_reps(out.pool.size(), below))
    out.pairs.push_back(out.pool[i]);
  return out;
}

// ---------------------------------------------------------------------
// Axiom emission
// ---------------------------------------------------------------------

namespace {

std::vector<std::string> const kAxiomClassNames = {"PiS", "EP", "Pw", "PWP", "PWPw", "W"};

//! Bounded search deciding whether some left S-poset satisfying EP has an
//! element a with s a <= t a.  Searching representatives up to isomorphism
//! is enough: both properties are isomorphism-invariant.
bool ep_premise_realizable(PomonoidPtr const& S, std::size_t s, std::size_t t,
                           std::size_t bound) {
  for (std::size_t m = 1; m <= bound; ++m) {
    for (SPoset const& B : enumerate_sposets(S, m, Side::left)) {
      if (!check_condition(B, Condition::EP).holds) continue;
      for (std::size_t a = 0; a < B.size(); ++a)
        if (B.leq(B.act(s, a), B.act(t, a))) return true;
    }
  }
  return false;
}

Term bare(std::size_t var) { return Term{{}, var}; }
Term coef(std::size_t letter, std::size_t var) { return Term{{letter}, var}; }

}  // namespace

std::string const& axiom_class_name(AxiomClass which) {
  return kAxiomClassNames[static_cast<std::size_t>(which)];
}

AxiomClass axiom_class_from_name(std::string const& name) {
  for (std::size_t i = 0; i < kAxiomClassNames.size(); ++i)
    if (kAxiomClassNames[i] == name) return static_cast<AxiomClass>(i);
  throw std::invalid_argument("unknown axiom class \"" + name + "\"");
}

AxiomSet emit_axioms(PomonoidPtr S, AxiomClass which, std::size_t vacuity_bound) {
  if (!S) throw std::invalid_argument("emit_axioms: null monoid");
  std::size_t const n   = S->size();
  std::size_t const one = S->one();
  AxiomSet          out{which, {}, false, vacuity_bound};
  // Variable ids: 0 = x, 1 = y (universal), 2 = z (interpolant).
  std::size_t const X = 0, Y = 1, Z = 2;

  switch (which) {
    case AxiomClass::PiS: {
      out.sentences.push_back(
          Sentence::forall(X, Sentence::eq(coef(one, X), bare(X))));
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          out.sentences.push_back(Sentence::forall(
              X, Sentence::eq(Term{{s, t}, X}, coef(S->mul(s, t), X))));
      for (std::size_t s = 0; s < n; ++s)
        out.sentences.push_back(Sentence::forall(
            X, Sentence::forall(
                   Y, Sentence::implication(Sentence::leq(bare(X), bare(Y)),
                                            Sentence::leq(coef(s, X), coef(s, Y))))));
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (S->leq(u, v))
            out.sentences.push_back(
                Sentence::forall(X, Sentence::leq(coef(u, X), coef(v, X))));
      break;
    }

    case AxiomClass::EP: {
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          WitnessSets ws = relation_sets(*S, s, t);
          bool        positive;
          if (!ws.elem_set.empty()) {
            positive = true;  // the regular S-poset S realizes the premise
          } else if (ws.pair_set.empty()) {
            positive = false;  // no poset in the class can realize it
          } else {
            positive = ep_premise_realizable(S, s, t, vacuity_bound);
            if (!positive) out.bound_relative = true;
          }
          Sentence premise = Sentence::leq(coef(s, X), coef(t, X));
          if (positive) {
            std::vector<Sentence> options;
            for (auto const& [u, v] : ws.pair_generators)
              options.push_back(Sentence::conjunction(
                  {Sentence::eq(bare(X), coef(u, Z)), Sentence::eq(bare(X), coef(v, Z))}));
            out.sentences.push_back(Sentence::forall(
                X, Sentence::implication(
                       premise, Sentence::exists(Z, Sentence::disjunction(options)))));
          } else {
            out.sentences.push_back(Sentence::forall(X, Sentence::negation(premise)));
          }
        }
      break;
    }

    case AxiomClass::Pw: {
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          Sentence      premise = Sentence::leq(coef(s, X), coef(t, Y));
          DominatingSet dom     = dominating_set(*S, DominationKind::Pw, s, t);
          if (dom.empty_pool) {
            out.sentences.push_back(Sentence::forall(
                X, Sentence::forall(Y, Sentence::negation(premise))));
            continue;
          }
          std::vector<Sentence> options;
          for (auto const& [u, v] : dom.pairs)
            options.push_back(Sentence::conjunction(
                {Sentence::leq(bare(X), coef(u, Z)), Sentence::leq(coef(v, Z), bare(Y))}));
          out.sentences.push_back(Sentence::forall(
              X, Sentence::forall(
                     Y, Sentence::implication(
                            premise, Sentence::exists(Z, Sentence::disjunction(options))))));
        }
      break;
    }

    case AxiomClass::PWP: {
      for (std::size_t s = 0; s < n; ++s) {
        // (1, 1) is always in R<=(s, s), so no instance is vacuous.
        WitnessSets           ws = relation_sets(*S, s, s);
        std::vector<Sentence> options;
        for (auto const& [u, v] : ws.pair_generators)
          options.push_back(Sentence::conjunction(
              {Sentence::eq(bare(X), coef(u, Z)), Sentence::eq(bare(Y), coef(v, Z))}));
        out.sentences.push_back(Sentence::forall(
            X, Sentence::forall(
                   Y, Sentence::implication(
                          Sentence::leq(coef(s, X), coef(s, Y)),
                          Sentence::exists(Z, Sentence::disjunction(options))))));
      }
      break;
    }

    case AxiomClass::PWPw: {
      for (std::size_t s = 0; s < n; ++s) {
        DominatingSet         dom = dominating_set(*S, DominationKind::PWPw, s, s);
        std::vector<Sentence> options;
        for (auto const& [u, v] : dom.pairs)
          options.push_back(Sentence::conjunction(
              {Sentence::leq(bare(X), coef(u, Z)), Sentence::leq(coef(v, Z), bare(Y))}));
        out.sentences.push_back(Sentence::forall(
            X, Sentence::forall(
                   Y, Sentence::implication(
                          Sentence::leq(coef(s, X), coef(s, Y)),
                          Sentence::exists(Z, Sentence::disjunction(options))))));
      }
      break;
    }

    case AxiomClass::W: {
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          Sentence      premise = Sentence::leq(coef(s, X), coef(t, Y));
          DominatingSet dom     = dominating_set(*S, DominationKind::W, s, t);
          if (dom.empty_pool) {
            out.sentences.push_back(Sentence::forall(
                X, Sentence::forall(Y, Sentence::negation(premise))));
            continue;
          }
          std::vector<Sentence> options;
          for (auto const& [p, q] : dom.pairs)
            options.push_back(Sentence::conjunction({Sentence::leq(coef(s, X), coef(p, Z)),
                                                     Sentence::leq(coef(q, Z), coef(t, Y))}));
          out.sentences.push_back(Sentence::forall(
              X, Sentence::forall(
                     Y, Sentence::implication(
                            premise, Sentence::exists(Z, Sentence::disjunction(options))))));
        }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// e-good factorisations
// ---------------------------------------------------------------------

namespace {

std::vector<char> principal_left_ideal(Pomonoid const& S, std::size_t w) {
  std::vector<char> in(S.size(), 0);
  for (std::size_t u = 0; u < S.size(); ++u) in[S.mul(u, w)] = 1;
  return in;
}

}  // namespace

bool e_good_check(Pomonoid const& S, std::size_t a, std::size_t x, std::size_t y,
                  std::size_t e) {
  check_element(S, a, "e_good_check: a");
  check_element(S, x, "e_good_check: x");
  check_element(S, y, "e_good_check: y");
  check_element(S, e, "e_good_check: e");
  if (S.mul(x, y) != a)
    throw std::invalid_argument("e_good_check: not a factorisation of a");
  if (S.mul(e, e) != e) throw std::invalid_argument("e_good_check: e is not idempotent");
  std::vector<char> const ideal_e = principal_left_ideal(S, e);
  for (std::size_t w = 0; w < S.size(); ++w) {
    if (S.mul(x, w) != e) continue;
    if (principal_left_ideal(S, w) != ideal_e) continue;
    for (std::size_t z = 0; z < S.size(); ++z)
      if (S.mul(w, z) == y) return false;
  }
  return true;
}

EGoodReport star_condition(PomonoidPtr S) {
  if (!S) throw std::invalid_argument("star_condition: null monoid");
  std::size_t const n = S->size();
  EGoodReport       report;
  report.holds = true;
  for (std::size_t e : S->idempotents()) {
    if (e == S->one()) continue;
    EGoodReport::PerIdempotent rec;
    rec.e = e;
    rec.factor_table.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::set<std::size_t> usable;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (S->mul(x, y) == a && e_good_check(*S, a, x, y, e)) usable.insert(x);
      rec.factor_table[a].assign(usable.begin(), usable.end());
      if (usable.empty() && !rec.failing_a) rec.failing_a = a;
    }
    if (rec.failing_a) {
      report.holds = false;
    } else {
      // Smallest hitting set, ties broken lexicographically: try supports
      // of size k = 1, 2, ... in lexicographic order of the element list.
      std::vector<std::size_t> combo;
      auto covers = [&](std::vector<std::size_t> const& f) {
        for (std::size_t a = 0; a < n; ++a) {
          bool hit = false;
          for (std::size_t x : f)
            if (std::binary_search(rec.factor_table[a].begin(), rec.factor_table[a].end(),
                                   x)) {
              hit = true;
              break;
            }
          if (!hit) return false;
        }
        return true;
      };
      for (std::size_t k = 1; k <= n && !rec.minimal_f; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
          if (covers(idx)) {
            rec.minimal_f = idx;
            break;
          }
          // next k-combination of {0, ..., n-1} in lexicographic order
          std::size_t i = k;
          while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
          if (i == 0) break;
          ++idx[i - 1];
          for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
    }
    report.details.push_back(std::move(rec));
  }
  return report;
}

}  // namespace sposet
