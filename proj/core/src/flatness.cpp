#include "sposet/flatness.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sposet/morphism.hpp"

namespace sposet {

std::string const& ideal_variant_name(IdealVariant v) {
  static std::string const names[] = {"PWF", "WF", "PWPF", "WPF"};
  return names[static_cast<int>(v)];
}

StandardQuotient build_standard_quotient(PomonoidPtr S, Skeleton const& sk) {
  sk.check(S->size());
  std::size_t const m = sk.rows_first();
  std::size_t const n = sk.rows_second();  // 0 for single skeletons
  // Generators: x = 0, x_2..x_m = 1..m-1, y_2..y_n = m..m+n-2, x' = last.
  std::size_t const gens  = sk.doubled() ? m + n : m + 1;
  std::size_t const x_gen = 0;
  std::size_t const xp_gen = gens - 1;
  std::size_t const ns     = S->size();
  SPoset            F      = free_act(S, Side::right, gens);

  auto elem = [&](std::size_t gen, std::size_t s) {
    return gen * ns + s;
  };
  auto x_of = [&](std::size_t i) {  // x_i for i in 1..m+1
    if (i == 1) {
      return x_gen;
    }
    return i == m + 1 ? xp_gen : i - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 1; i <= m; ++i) {
    rel.emplace_back(elem(x_of(i), sk.s1(i - 1)), elem(x_of(i + 1), sk.t1(i - 1)));
  }
  if (sk.doubled()) {
    auto y_of = [&](std::size_t j) {  // y_j for j in 1..n+1, with y_1 = x', y_{n+1} = x
      if (j == 1) {
        return xp_gen;
      }
      return j == n + 1 ? x_gen : m + j - 2;
    };
    for (std::size_t j = 1; j <= n; ++j) {
      rel.emplace_back(elem(y_of(j), sk.s2(j - 1)), elem(y_of(j + 1), sk.t2(j - 1)));
    }
  }

  QuotientSPoset q  = order_congruence(F, rel);
  std::size_t const cx  = q.class_of[elem(x_gen, S->one())];
  std::size_t const cxp = q.class_of[elem(xp_gen, S->one())];

  // The union of the orbits of the marked classes, as a sub-right-S-poset.
  std::set<std::size_t> carrier_set;
  for (std::size_t s = 0; s < ns; ++s) {
    carrier_set.insert(q.quotient.act(s, cx));
    carrier_set.insert(q.quotient.act(s, cxp));
  }
  std::vector<std::size_t> carrier(carrier_set.begin(), carrier_set.end());
  SPoset                   sub = sub_act(q.quotient, carrier);
  auto pos = [&](std::size_t cls) {
    return static_cast<std::size_t>(std::find(carrier.begin(), carrier.end(), cls)
                                    - carrier.begin());
  };
  std::size_t const sx  = pos(cx);
  std::size_t const sxp = pos(cxp);
  return {sk,  std::move(F), std::move(rel), std::move(q), cx, cxp,
          std::move(sub), std::move(carrier), sx, sxp};
}

StandardQuotientFamily::StandardQuotientFamily(PomonoidPtr S, std::size_t max_flat_len,
                                               bool doubled)
    : _max_flat_len(max_flat_len), _doubled(doubled) {
  for (Skeleton const& sk : enumerate_skeletons(S->size(), max_flat_len, doubled)) {
    _quotients.push_back(build_standard_quotient(S, sk));
  }
}

FlatnessVerdict check_ideal_flatness(SPoset const& B, IdealVariant v) {
  if (B.side() != Side::left) {
    throw std::invalid_argument("check_ideal_flatness: B must be a left S-poset");
  }
  bool const principal_only = v == IdealVariant::PWF || v == IdealVariant::PWPF;
  bool const need_embedding = v == IdealVariant::PWPF || v == IdealVariant::WPF;

  SPoset const      reg = regular_act(B.monoid(), Side::right);
  TensorPoset const SB  = tensor_product(reg, B);

  for (RightIdeal const& ideal : right_ideals(B.monoid(), principal_only)) {
    TensorPoset const IB      = tensor_product(ideal.act, B);
    PoMap const       induced = induced_tensor_map(IB, SB, ideal.inclusion);
    for (std::size_t c = 0; c < IB.class_count(); ++c) {
      for (std::size_t d = 0; d < IB.class_count(); ++d) {
        bool bad;
        if (need_embedding) {
          // An order-embedding: classes compare iff their images do.
          bad = IB.class_order()(c, d) != SB.class_order()(induced(c), induced(d));
        } else {
          bad = c != d && induced(c) == induced(d);
        }
        if (bad) {
          std::ostringstream os;
          os << "ideal {";
          for (std::size_t i = 0; i < ideal.elements.size(); ++i) {
            os << (i ? "," : "") << B.monoid()->name(ideal.elements[i]);
          }
          os << "}: classes " << c << " and " << d
             << (need_embedding ? " break the order-embedding" : " collapse")
             << " in the induced map to S (x) B";
          FlatnessVerdict out{FlatnessVerdict::Status::fails, 0, os.str(), std::nullopt,
                              std::vector<std::size_t>{c, d}};
          return out;
        }
      }
    }
  }
  return {FlatnessVerdict::Status::holds, 0, "", std::nullopt, std::nullopt};
}

FlatnessVerdict check_flat_bounded(SPoset const& B, bool po,
                                   StandardQuotientFamily const& family) {
  if (B.side() != Side::left) {
    throw std::invalid_argument("check_flat_bounded: B must be a left S-poset");
  }
  if (family.doubled() == po) {
    throw std::invalid_argument("check_flat_bounded: family shape does not match po flag");
  }
  for (StandardQuotient const& sq : family.quotients()) {
    // Pairs (b, b') connected through the standard quotient: gamma (doubled)
    // or gamma_leq (single) must hold in B; delta on the quotient side holds
    // by construction.
    std::optional<TensorPoset> WB;  // built lazily, only when needed
    for (std::size_t b = 0; b < B.size(); ++b) {
      for (std::size_t b2 = 0; b2 < B.size(); ++b2) {
        std::size_t const args[2] = {b, b2};
        bool const connected
            = po ? eval_skeleton_formula(SkeletonFormula::gamma_leq, sq.skeleton, B, args).holds
                 : eval_skeleton_formula(SkeletonFormula::gamma, sq.skeleton, B, args).holds;
        if (!connected) {
          continue;
        }
        if (!WB) {
          WB.emplace(tensor_product(sq.sub, B));
        }
        bool const ok
            = po ? tensor_leq(*WB, {sq.sub_x, b}, {sq.sub_xp, b2})
                 : WB->class_of(sq.sub_x, b) == WB->class_of(sq.sub_xp, b2);
        if (!ok) {
          std::ostringstream os;
          os << "skeleton (";
          for (std::size_t i = 0; i < sq.skeleton.first.size(); ++i) {
            os << (i ? "," : "") << B.monoid()->name(sq.skeleton.first[i]);
          }
          if (sq.skeleton.doubled()) {
            os << ";";
            for (std::size_t i = 0; i < sq.skeleton.second.size(); ++i) {
              os << (i ? "," : "") << B.monoid()->name(sq.skeleton.second[i]);
            }
          }
          os << "), b = " << B.name(b) << ", b' = " << B.name(b2)
             << ": connected through the standard quotient but not over [x]S u [x']S";
          return {FlatnessVerdict::Status::fails, family.max_flat_len(), os.str(),
                  sq.skeleton, std::vector<std::size_t>{b, b2}};
        }
      }
    }
  }
  return {FlatnessVerdict::Status::bounded_holds, family.max_flat_len(), "", std::nullopt,
          std::nullopt};
}

FlatnessVerdict check_flat_bounded(SPoset const& B, bool po, std::size_t max_len) {
  if ((po && max_len < 2) || (!po && max_len < 4)) {
    throw std::invalid_argument("check_flat_bounded: bound below the minimal skeleton length");
  }
  StandardQuotientFamily family(B.monoid(), max_len, !po);
  return check_flat_bounded(B, po, family);
}

std::vector<Skeleton> replacement_skeleton_search(PomonoidPtr S, Skeleton const& sk,
                                                  std::span<SPoset const> family,
                                                  std::size_t             bound) {
  StandardQuotient const sq = build_standard_quotient(S, sk);
  std::vector<Skeleton> const candidates
      = enumerate_skeletons(S->size(), bound, sk.doubled());

  std::set<Skeleton> found;
  for (SPoset const& B : family) {
    if (B.side() != Side::left || !same_monoid(B.monoid(), S)) {
      throw std::invalid_argument("replacement_skeleton_search: family must be left S-posets");
    }
    for (std::size_t b = 0; b < B.size(); ++b) {
      for (std::size_t b2 = 0; b2 < B.size(); ++b2) {
        std::size_t const args[2] = {b, b2};
        bool const through_standard
            = sk.doubled()
                  ? eval_skeleton_formula(SkeletonFormula::gamma, sk, B, args).holds
                  : eval_skeleton_formula(SkeletonFormula::gamma_leq, sk, B, args).holds;
        if (!through_standard) {
          continue;
        }
        for (Skeleton const& cand : candidates) {
          if (found.count(cand)) {
            continue;
          }
          if (connected_by_skeleton(sq.sub, B, {sq.sub_x, b}, {sq.sub_xp, b2}, cand)) {
            found.insert(cand);
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace sposet
