#include "sposet/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace sposet {

std::string const& map_kind_name(MapKind kind) {
  static std::string const names[] = {"none", "pomorphism", "embedding", "isomorphism"};
  return names[static_cast<int>(kind)];
}

namespace {

void check_compatible(SPoset const& A, SPoset const& B, PoMap const& f) {
  if (!same_monoid(A.monoid(), B.monoid())) {
    throw std::invalid_argument("morphism: posets must share the monoid");
  }
  if (A.side() != B.side()) {
    throw std::invalid_argument("morphism: posets must share the side");
  }
  if (f.size() != A.size()) {
    throw std::invalid_argument("morphism: map has wrong domain size");
  }
  for (std::size_t v : f.img) {
    if (v >= B.size()) {
      throw std::invalid_argument("morphism: image out of range");
    }
  }
}

bool is_pomorphism(SPoset const& A, SPoset const& B, std::vector<std::size_t> const& f) {
  for (std::size_t s = 0; s < A.monoid()->size(); ++s) {
    for (std::size_t a = 0; a < A.size(); ++a) {
      if (f[A.act(s, a)] != B.act(s, f[a])) {
        return false;
      }
    }
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = 0; b < A.size(); ++b) {
      if (A.leq(a, b) && !B.leq(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

MapKind morphism_kind(SPoset const& A, SPoset const& B, PoMap const& f) {
  check_compatible(A, B, f);
  if (!is_pomorphism(A, B, f.img)) {
    return MapKind::none;
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = 0; b < A.size(); ++b) {
      if (B.leq(f(a), f(b)) && !A.leq(a, b)) {
        return MapKind::pomorphism;
      }
    }
  }
  // An order-embedding is injective (f(a) = f(b) gives a <= b <= a), so
  // surjectivity is the only extra demand for an isomorphism.
  std::vector<char> hit(B.size(), 0);
  for (std::size_t v : f.img) {
    hit[v] = 1;
  }
  bool const onto = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return onto ? MapKind::isomorphism : MapKind::embedding;
}

std::vector<PoMap> enumerate_pomorphisms(SPoset const& A, SPoset const& B) {
  if (!same_monoid(A.monoid(), B.monoid()) || A.side() != B.side()) {
    throw std::invalid_argument("enumerate_pomorphisms: posets must share monoid and side");
  }
  std::vector<PoMap>       out;
  std::vector<std::size_t> f(A.size(), 0);
  while (true) {
    if (is_pomorphism(A, B, f)) {
      out.push_back({f});
    }
    // Odometer increment, most significant index first so the output is
    // lexicographic in the image vector.
    std::size_t i = f.size();
    while (i > 0) {
      --i;
      if (++f[i] < B.size()) {
        break;
      }
      f[i] = 0;
      if (i == 0) {
        return out;
      }
    }
  }
}

namespace {

// Per-element profile used to prune the isomorphism search: an isomorphism
// must preserve order in/out degrees and the image under each monoid element
// interacts with the candidate assignment (checked incrementally below).
std::pair<std::size_t, std::size_t> degrees(SPoset const& A, std::size_t a) {
  std::size_t down = 0;
  std::size_t up   = 0;
  for (std::size_t b = 0; b < A.size(); ++b) {
    down += A.leq(b, a);
    up += A.leq(a, b);
  }
  return {down, up};
}

bool extend_iso(SPoset const& A, SPoset const& B, std::vector<std::size_t>& f,
                std::vector<char>& used, std::size_t a) {
  if (a == A.size()) {
    return true;
  }
  for (std::size_t b = 0; b < B.size(); ++b) {
    if (used[b] || degrees(A, a) != degrees(B, b)) {
      continue;
    }
    bool ok = true;
    for (std::size_t prev = 0; prev < a && ok; ++prev) {
      ok = (A.leq(prev, a) == B.leq(f[prev], b)) && (A.leq(a, prev) == B.leq(b, f[prev]));
    }
    // Action consistency on the assigned prefix.
    for (std::size_t s = 0; s < A.monoid()->size() && ok; ++s) {
      std::size_t const img = A.act(s, a);
      if (img <= a) {
        ok = (img == a) ? (B.act(s, b) == b) : (B.act(s, b) == f[img]);
      }
      for (std::size_t prev = 0; prev < a && ok; ++prev) {
        if (A.act(s, prev) == a) {
          ok = B.act(s, f[prev]) == b;
        }
      }
    }
    if (!ok) {
      continue;
    }
    f[a]    = b;
    used[b] = 1;
    if (extend_iso(A, B, f, used, a + 1)) {
      return true;
    }
    used[b] = 0;
  }
  return false;
}

}  // namespace

std::optional<PoMap> isomorphic(SPoset const& A, SPoset const& B) {
  if (!same_monoid(A.monoid(), B.monoid()) || A.side() != B.side() || A.size() != B.size()) {
    return std::nullopt;
  }
  std::vector<std::size_t> f(A.size(), 0);
  std::vector<char>        used(B.size(), 0);
  if (!extend_iso(A, B, f, used, 0)) {
    return std::nullopt;
  }
  PoMap m{f};
  // The incremental checks above cover everything, but the full classifier
  // is cheap and keeps this function self-evidently correct.
  if (morphism_kind(A, B, m) != MapKind::isomorphism) {
    return std::nullopt;
  }
  return m;
}

std::vector<RightIdeal> right_ideals(PomonoidPtr S, bool principal_only) {
  std::size_t const n = S->size();
  SPoset const      reg = regular_act(S, Side::right);

  std::vector<std::vector<std::size_t>> subsets;
  if (principal_only) {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<char> in(n, 0);
      for (std::size_t s = 0; s < n; ++s) {
        in[S->mul(a, s)] = 1;
      }
      std::vector<std::size_t> elems;
      for (std::size_t b = 0; b < n; ++b) {
        if (in[b]) {
          elems.push_back(b);
        }
      }
      if (std::find(subsets.begin(), subsets.end(), elems) == subsets.end()) {
        subsets.push_back(std::move(elems));
      }
    }
  } else {
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<std::size_t> elems;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::size_t(1) << b)) {
          elems.push_back(b);
        }
      }
      bool closed = true;
      for (std::size_t a : elems) {
        for (std::size_t s = 0; s < n && closed; ++s) {
          closed = (mask >> S->mul(a, s)) & 1;
        }
      }
      if (closed) {
        subsets.push_back(std::move(elems));
      }
    }
  }
  std::sort(subsets.begin(), subsets.end(), [](auto const& x, auto const& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });

  std::vector<RightIdeal> out;
  for (auto& elems : subsets) {
    SPoset act = sub_act(reg, elems);
    out.push_back({elems, std::move(act), PoMap{elems}});
  }
  return out;
}

}  // namespace sposet
