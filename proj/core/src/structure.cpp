#include "sposet/structure.hpp"

#include <numeric>
#include <stdexcept>

namespace sposet {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    parent[find(x)] = find(y);
  }
};

// Does c generate the component via s -> s·c as an isomorphism from S·e?
// Needs S·c to be exactly the component and s·e <= t·e iff s·c <= t·c.
bool generates(SPoset const& A, std::vector<std::size_t> const& component, std::size_t e,
               std::size_t c) {
  Pomonoid const& S = *A.monoid();
  std::vector<char> orbit(A.size(), 0);
  for (std::size_t s = 0; s < S.size(); ++s) {
    orbit[A.act(s, c)] = 1;
  }
  std::size_t count = 0;
  for (std::size_t a = 0; a < A.size(); ++a) {
    count += orbit[a];
  }
  if (count != component.size()) {
    return false;
  }
  for (std::size_t a : component) {
    if (!orbit[a]) {
      return false;
    }
  }
  for (std::size_t s = 0; s < S.size(); ++s) {
    for (std::size_t t = 0; t < S.size(); ++t) {
      if (S.leq(S.mul(s, e), S.mul(t, e)) != A.leq(A.act(s, c), A.act(t, c))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Decomposition decompose(SPoset const& A) {
  if (A.side() != Side::left) {
    throw std::invalid_argument("decompose: stated for left S-posets");
  }
  std::size_t const m = A.size();
  UnionFind         uf(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (A.leq(a, b)) {
        uf.unite(a, b);
      }
    }
    for (std::size_t s = 0; s < A.monoid()->size(); ++s) {
      uf.unite(a, A.act(s, a));
    }
  }
  Decomposition dec;
  std::vector<std::size_t> comp_of(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t const root = uf.find(a);
    if (comp_of[root] == m) {
      comp_of[root] = dec.components.size();
      dec.components.emplace_back();
    }
    dec.components[comp_of[root]].push_back(a);
  }
  for (auto const& component : dec.components) {
    std::optional<Decomposition::Generator> gen;
    for (std::size_t e : A.monoid()->idempotents()) {
      for (std::size_t c : component) {
        if (generates(A, component, e, c)) {
          gen = Decomposition::Generator{e, c};
          break;
        }
      }
      if (gen) {
        break;
      }
    }
    dec.generators.push_back(gen);
  }
  return dec;
}

ProjectivityResult is_projective(SPoset const& A) {
  Decomposition dec = decompose(A);
  bool          ok  = true;
  for (auto const& g : dec.generators) {
    ok = ok && g.has_value();
  }
  return {ok, std::move(dec)};
}

FreenessResult is_free(SPoset const& A) {
  Decomposition dec = decompose(A);
  std::size_t const one = A.monoid()->one();
  bool ok = true;
  for (std::size_t i = 0; i < dec.components.size() && ok; ++i) {
    bool found = false;
    for (std::size_t c : dec.components[i]) {
      if (generates(A, dec.components[i], one, c)) {
        found = true;
        break;
      }
    }
    ok = found;
  }
  std::size_t const basis = ok ? dec.components.size() : 0;
  return {ok, basis, std::move(dec)};
}

}  // namespace sposet
