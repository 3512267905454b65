#include "sposet/sposet.hpp"

#include <stdexcept>

namespace sposet {

std::string const& side_name(Side side) {
  static std::string const left  = "left";
  static std::string const right = "right";
  return side == Side::left ? left : right;
}

SPoset::SPoset(PomonoidPtr                           S,
               Side                                  side,
               std::vector<std::vector<std::size_t>> act,
               Relation                              leq,
               std::vector<std::string>              names)
    : _S(std::move(S)),
      _side(side),
      _m(0),
      _act(std::move(act)),
      _leq(std::move(leq)),
      _names(std::move(names)) {
  if (!_S) {
    throw std::invalid_argument("sposet: null monoid");
  }
  if (_act.size() != _S->size()) {
    throw std::invalid_argument("sposet: action table must have one row per monoid element");
  }
  _m = _act.empty() ? 0 : _act[0].size();
  if (_m == 0) {
    throw std::invalid_argument("sposet: carrier must be non-empty");
  }
  for (auto const& row : _act) {
    if (row.size() != _m) {
      throw std::invalid_argument("sposet: ragged action table");
    }
    for (std::size_t v : row) {
      if (v >= _m) {
        throw std::invalid_argument("sposet: action entry out of range");
      }
    }
  }
  if (_leq.size() != _m) {
    throw std::invalid_argument("sposet: order relation has wrong size");
  }
  if (_names.empty()) {
    _names.resize(_m);
    for (std::size_t i = 0; i < _m; ++i) {
      _names[i] = "p" + std::to_string(i);
    }
  } else if (_names.size() != _m) {
    throw std::invalid_argument("sposet: name list has wrong size");
  }
}

std::size_t SPoset::index_of(std::string const& name) const {
  for (std::size_t i = 0; i < _m; ++i) {
    if (_names[i] == name) {
      return i;
    }
  }
  return _m;
}

bool SPoset::operator==(SPoset const& other) const {
  return _S == other._S && _side == other._side && _act == other._act && _leq == other._leq;
}

ValidationReport validate_sposet(SPoset const& A) {
  ValidationReport rep;
  Pomonoid const&  S = *A.monoid();
  std::size_t const m = A.size();
  std::size_t const n = S.size();

  for (std::size_t a = 0; a < m; ++a) {
    if (A.act(S.one(), a) != a) {
      rep.violations.push_back({"identity-action", {a}});
    }
  }
  // Left acts compose as s·(t·a) = (st)·a; right acts as (a·s)·t = a·(st).
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t const st = S.mul(s, t);
      for (std::size_t a = 0; a < m; ++a) {
        std::size_t const lhs = A.side() == Side::left ? A.act(s, A.act(t, a))
                                                       : A.act(t, A.act(s, a));
        if (lhs != A.act(st, a)) {
          rep.violations.push_back({"associativity-action", {s, t, a}});
        }
      }
    }
  }
  Relation const& leq = A.order();
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq(a, a)) {
      rep.violations.push_back({"reflexivity", {a}});
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (leq(a, b) && leq(b, a)) {
        rep.violations.push_back({"antisymmetry", {a, b}});
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!leq(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          rep.violations.push_back({"transitivity", {a, b, c}});
        }
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (leq(a, b) && !leq(A.act(s, a), A.act(s, b))) {
          rep.violations.push_back({"monotone-action", {s, a, b}});
        }
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!S.leq(s, t)) {
        continue;
      }
      for (std::size_t a = 0; a < m; ++a) {
        if (!leq(A.act(s, a), A.act(t, a))) {
          rep.violations.push_back({"monotone-coefficient", {s, t, a}});
        }
      }
    }
  }
  return rep;
}

SPoset make_sposet(PomonoidPtr                           S,
                   Side                                  side,
                   std::vector<std::vector<std::size_t>> act,
                   Relation                              leq,
                   std::vector<std::string>              names) {
  SPoset A(std::move(S), side, std::move(act), std::move(leq), std::move(names));
  auto   rep = validate_sposet(A);
  if (!rep.ok()) {
    // Render the message before handing the report to the exception: argument
    // evaluation order is unspecified, so the move may happen first.
    auto msg = "s-poset axioms fail: " + rep.to_string();
    throw validation_error(msg, std::move(rep));
  }
  return A;
}

SPoset regular_act(PomonoidPtr S, Side side) {
  std::size_t const n = S->size();
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < n; ++a) {
      // Row s sends a to s·a (left) or a·s (right).
      act[s][a] = side == Side::left ? S->mul(s, a) : S->mul(a, s);
    }
  }
  Relation leq   = S->order();
  auto     names = S->names();
  return SPoset(std::move(S), side, std::move(act), std::move(leq), std::move(names));
}

SPoset one_element_act(PomonoidPtr S, Side side) {
  std::vector<std::vector<std::size_t>> act(S->size(), std::vector<std::size_t>(1, 0));
  return SPoset(std::move(S), side, std::move(act), Relation::identity(1), {"theta"});
}

SPoset sub_act(SPoset const& A, std::vector<std::size_t> const& carrier) {
  std::size_t const m = carrier.size();
  std::vector<std::size_t> pos(A.size(), A.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (carrier[i] >= A.size()) {
      throw std::invalid_argument("sub_act: carrier index out of range");
    }
    pos[carrier[i]] = i;
  }
  std::size_t const n = A.monoid()->size();
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t const img = A.act(s, carrier[i]);
      if (pos[img] == A.size()) {
        throw std::invalid_argument("sub_act: carrier not closed under the action");
      }
      act[s][i] = pos[img];
    }
  }
  Relation leq(m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = A.name(carrier[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (A.leq(carrier[i], carrier[j])) {
        leq.set(i, j);
      }
    }
  }
  return SPoset(A.monoid(), A.side(), std::move(act), std::move(leq), std::move(names));
}

SPoset disjoint_union(std::span<SPoset const> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("disjoint_union: need at least one part");
  }
  auto const& S    = parts[0].monoid();
  Side const  side = parts[0].side();
  std::size_t m    = 0;
  for (auto const& p : parts) {
    if (!same_monoid(p.monoid(), S) || p.side() != side) {
      throw std::invalid_argument("disjoint_union: parts must share monoid and side");
    }
    m += p.size();
  }
  std::size_t const n = S->size();
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
  Relation                 leq(m);
  std::vector<std::string> names(m);
  std::size_t              off = 0;
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    SPoset const& p = parts[pi];
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < p.size(); ++a) {
        act[s][off + a] = off + p.act(s, a);
      }
    }
    for (std::size_t a = 0; a < p.size(); ++a) {
      names[off + a] = parts.size() == 1 ? p.name(a)
                                         : "c" + std::to_string(pi) + "." + p.name(a);
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (p.leq(a, b)) {
          leq.set(off + a, off + b);
        }
      }
    }
    off += p.size();
  }
  return SPoset(S, side, std::move(act), std::move(leq), std::move(names));
}

SPoset free_act(PomonoidPtr S, Side side, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("free_act: need at least one generator");
  }
  std::vector<SPoset> copies(k, regular_act(S, side));
  return disjoint_union(copies);
}

std::pair<SPoset, std::vector<std::size_t>> cyclic_act(PomonoidPtr S, Side side, std::size_t g) {
  if (g >= S->size()) {
    throw std::invalid_argument("cyclic_act: generator out of range");
  }
  std::vector<char> in(S->size(), 0);
  for (std::size_t s = 0; s < S->size(); ++s) {
    in[side == Side::left ? S->mul(s, g) : S->mul(g, s)] = 1;
  }
  std::vector<std::size_t> carrier;
  for (std::size_t a = 0; a < S->size(); ++a) {
    if (in[a]) {
      carrier.push_back(a);
    }
  }
  SPoset reg = regular_act(std::move(S), side);
  return {sub_act(reg, carrier), carrier};
}

bool same_monoid(PomonoidPtr const& a, PomonoidPtr const& b) {
  return a == b || (a && b && *a == *b);
}

SPoset trivial_product_act(SPoset const& A, SPoset const& B) {
  if (!same_monoid(A.monoid(), B.monoid())) {
    throw std::invalid_argument("trivial_product_act: factors must share the monoid");
  }
  std::size_t const nA = A.size();
  std::size_t const nB = B.size();
  std::size_t const m  = nA * nB;
  std::vector<std::size_t> id(m);
  for (std::size_t i = 0; i < m; ++i) {
    id[i] = i;
  }
  std::vector<std::vector<std::size_t>> act(A.monoid()->size(), id);
  Relation                 leq(m);
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < nA; ++a) {
    for (std::size_t b = 0; b < nB; ++b) {
      names[a * nB + b] = "(" + A.name(a) + "," + B.name(b) + ")";
      for (std::size_t a2 = 0; a2 < nA; ++a2) {
        for (std::size_t b2 = 0; b2 < nB; ++b2) {
          if (A.leq(a, a2) && B.leq(b, b2)) {
            leq.set(a * nB + b, a2 * nB + b2);
          }
        }
      }
    }
  }
  // Side is immaterial for a trivial action; keep the left tag.
  return SPoset(A.monoid(), Side::left, std::move(act), std::move(leq), std::move(names));
}

}  // namespace sposet
