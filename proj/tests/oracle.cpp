#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {
namespace {

using sposet::PomonoidPtr;
using sposet::Relation;
using sposet::Side;
using sposet::SPoset;

//! A raw candidate monoid-with-order: flat tables, no validation built in.
struct RawPomonoid {
  std::size_t              n;
  std::vector<std::size_t> mul;  // row-major
  std::size_t              one;
  std::vector<char>        leq;  // row-major adjacency
};

bool raw_leq(RawPomonoid const& p, std::size_t a, std::size_t b) {
  return p.leq[a * p.n + b] != 0;
}

//! All multiplication tables on {0..n-1} that are associative and have an
//! identity (anywhere, not normalised to index 0).
std::vector<RawPomonoid> raw_monoids(std::size_t n) {
  std::vector<RawPomonoid> out;
  std::vector<std::size_t> mul(n * n, 0);
  while (true) {
    bool        assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a) {
      for (std::size_t b = 0; b < n && assoc; ++b) {
        for (std::size_t c = 0; c < n && assoc; ++c) {
          if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) {
            assoc = false;
          }
        }
      }
    }
    if (assoc) {
      for (std::size_t e = 0; e < n; ++e) {
        bool ident = true;
        for (std::size_t a = 0; a < n && ident; ++a) {
          ident = mul[e * n + a] == a && mul[a * n + e] == a;
        }
        if (ident) {
          out.push_back(RawPomonoid{n, mul, e, {}});
          break;  // a monoid has at most one identity
        }
      }
    }
    // advance the table odometer
    std::size_t i = 0;
    while (i < mul.size() && mul[i] + 1 == n) {
      mul[i++] = 0;
    }
    if (i == mul.size()) {
      break;
    }
    ++mul[i];
  }
  return out;
}

//! All reflexive partial orders on n points as adjacency matrices.
std::vector<std::vector<char>> raw_partial_orders(std::size_t n) {
  std::vector<std::vector<char>> out;
  std::size_t const off = n * (n - 1);  // off-diagonal cells
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) {
        cells.emplace_back(a, b);
      }
    }
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << off); ++mask) {
    std::vector<char> adj(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      adj[a * n + a] = 1;
    }
    for (std::size_t i = 0; i < off; ++i) {
      if (mask & (std::size_t{1} << i)) {
        adj[cells[i].first * n + cells[i].second] = 1;
      }
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && adj[a * n + b] && adj[b * n + a]) {
          ok = false;  // antisymmetry
        }
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (adj[a * n + b] && adj[b * n + c] && !adj[a * n + c]) {
            ok = false;  // transitivity
          }
        }
      }
    }
    if (ok) {
      out.push_back(std::move(adj));
    }
  }
  return out;
}

bool order_compatible(RawPomonoid const& p) {
  std::size_t const n = p.n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!raw_leq(p, a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!raw_leq(p, p.mul[c * n + a], p.mul[c * n + b])
            || !raw_leq(p, p.mul[a * n + c], p.mul[b * n + c])) {
          return false;
        }
      }
    }
  }
  return true;
}

//! Isomorphism by explicit permutation search over the full symmetric
//! group (identities need not line up beforehand; an isomorphism maps one
//! onto the other automatically).
bool pomonoids_isomorphic(RawPomonoid const& p, RawPomonoid const& q) {
  std::size_t const        n = p.n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        ok = perm[p.mul[a * n + b]] == q.mul[perm[a] * n + perm[b]]
             && raw_leq(p, a, b) == raw_leq(q, perm[a], perm[b]);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t count_pomonoids_where(std::size_t n, bool trivial_order_only) {
  if (n == 0) {
    throw std::invalid_argument("oracle: n must be positive");
  }
  std::vector<RawPomonoid> reps;
  auto const               monoids = raw_monoids(n);
  auto const               orders  = raw_partial_orders(n);
  for (RawPomonoid const& m : monoids) {
    for (auto const& adj : orders) {
      RawPomonoid cand = m;
      cand.leq         = adj;
      if (trivial_order_only) {
        bool diag = true;
        for (std::size_t a = 0; a < n && diag; ++a) {
          for (std::size_t b = 0; b < n && diag; ++b) {
            diag = (adj[a * n + b] != 0) == (a == b);
          }
        }
        if (!diag) {
          continue;
        }
      }
      if (!order_compatible(cand)) {
        continue;
      }
      bool fresh = true;
      for (RawPomonoid const& seen : reps) {
        if (pomonoids_isomorphic(cand, seen)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(std::move(cand));
      }
    }
  }
  return reps.size();
}

struct RawAct {
  std::size_t                           m;  // carrier size
  std::vector<std::vector<std::size_t>> act;
  std::vector<char>                     leq;
};

bool act_valid(sposet::Pomonoid const& S, Side side, RawAct const& r) {
  std::size_t const n = S.size();
  std::size_t const m = r.m;
  auto              le = [&](std::size_t a, std::size_t b) { return r.leq[a * m + b] != 0; };
  for (std::size_t a = 0; a < m; ++a) {
    if (r.act[S.one()][a] != a) {
      return false;
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t a = 0; a < m; ++a) {
        std::size_t const composite = side == Side::left
                                          ? r.act[s][r.act[t][a]]
                                          : r.act[t][r.act[s][a]];
        if (r.act[S.mul(s, t)][a] != composite) {
          return false;
        }
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (le(a, b) && !le(r.act[s][a], r.act[s][b])) {
          return false;
        }
      }
      for (std::size_t t = 0; t < n; ++t) {
        if (S.leq(s, t) && !le(r.act[s][a], r.act[t][a])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool acts_isomorphic(RawAct const& p, RawAct const& q, std::size_t n) {
  std::size_t const        m = p.m;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s) {
      for (std::size_t a = 0; a < m && ok; ++a) {
        ok = perm[p.act[s][a]] == q.act[s][perm[a]];
      }
    }
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) {
        ok = (p.leq[a * m + b] != 0) == (q.leq[perm[a] * m + perm[b]] != 0);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::size_t count_pomonoids(std::size_t n) {
  return count_pomonoids_where(n, false);
}

std::size_t count_pomonoids_trivial_order(std::size_t n) {
  return count_pomonoids_where(n, true);
}

std::size_t count_sposets(PomonoidPtr const& S, std::size_t m, Side side) {
  if (!S || m == 0) {
    throw std::invalid_argument("oracle: need a monoid and a positive size");
  }
  std::size_t const n = S->size();
  // every row of every action table runs through all m^m maps, including
  // the identity row (filtered by act_valid rather than fixed up front)
  std::size_t maps = 1;
  for (std::size_t i = 0; i < n * m; ++i) {
    maps *= m;
  }
  auto const          orders = raw_partial_orders(m);
  std::vector<RawAct> reps;
  for (std::size_t code = 0; code < maps; ++code) {
    RawAct r;
    r.m = m;
    r.act.assign(n, std::vector<std::size_t>(m, 0));
    std::size_t rest = code;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < m; ++a) {
        r.act[s][a] = rest % m;
        rest /= m;
      }
    }
    for (auto const& adj : orders) {
      r.leq = adj;
      if (!act_valid(*S, side, r)) {
        continue;
      }
      bool fresh = true;
      for (RawAct const& seen : reps) {
        if (acts_isomorphic(r, seen, n)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(r);
      }
    }
  }
  return reps.size();
}

Relation tensor_preorder(SPoset const& A, SPoset const& B) {
  std::size_t const ma = A.size();
  std::size_t const mb = B.size();
  std::size_t const n  = A.monoid()->size();
  auto idx = [mb](std::size_t a, std::size_t b) { return a * mb + b; };
  Relation rel(ma * mb);
  for (std::size_t a = 0; a < ma; ++a) {
    for (std::size_t b = 0; b < mb; ++b) {
      for (std::size_t a2 = 0; a2 < ma; ++a2) {
        for (std::size_t b2 = 0; b2 < mb; ++b2) {
          if (A.leq(a, a2) && B.leq(b, b2)) {
            rel.set(idx(a, b), idx(a2, b2));
          }
        }
      }
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t const swapped = idx(A.act(s, a), b);
        std::size_t const other   = idx(a, B.act(s, b));
        rel.set(swapped, other);
        rel.set(other, swapped);
      }
    }
  }
  rel.transitive_close();
  return rel;
}

}  // namespace oracle
