#include "sposet/conditions.hpp"

#include <functional>
#include <stdexcept>

namespace sposet {

std::string const& condition_name(Condition c) {
  static std::string const names[] = {"P",  "E", "SF",        "EP",        "Pw",
                                      "W",  "U", "Uam",       "PWP",       "PWPw"};
  return names[static_cast<int>(c)];
}

Condition condition_from_name(std::string const& name) {
  for (Condition c : all_conditions()) {
    if (condition_name(c) == name) {
      return c;
    }
  }
  if (name == "U_literal") {
    return Condition::U_literal;
  }
  if (name == "U_amended") {
    return Condition::U_amended;
  }
  throw std::invalid_argument("unknown condition: " + name);
}

std::vector<Condition> const& all_conditions() {
  static std::vector<Condition> const all
      = {Condition::P,  Condition::E, Condition::SF,        Condition::EP,        Condition::Pw,
         Condition::W,  Condition::U_literal, Condition::U_amended, Condition::PWP,
         Condition::PWPw};
  return all;
}

namespace {

using Premise = std::vector<std::size_t>;
using Witness = std::vector<std::size_t>;

// Shared driver: enumerate premises in lexicographic order, search each for
// its lexicographically least witness, stop at the first premise without one.
Verdict run_check(std::vector<Premise> const&                         premises,
                  std::function<std::optional<Witness>(Premise const&)> const& find) {
  Verdict v{true, std::nullopt, {}};
  for (Premise const& p : premises) {
    auto w = find(p);
    if (!w) {
      v.holds          = false;
      v.counterexample = p;
      return v;
    }
    v.witnesses.emplace_back(p, std::move(*w));
  }
  return v;
}

// The right ideal sS as an ascending list, for each s.
std::vector<std::vector<std::size_t>> right_ideal_lists(Pomonoid const& S) {
  std::vector<std::vector<std::size_t>> out(S.size());
  for (std::size_t s = 0; s < S.size(); ++s) {
    std::vector<char> in(S.size(), 0);
    for (std::size_t w = 0; w < S.size(); ++w) {
      in[S.mul(s, w)] = 1;
    }
    for (std::size_t p = 0; p < S.size(); ++p) {
      if (in[p]) {
        out[s].push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

Verdict check_condition(SPoset const& B, Condition c) {
  if (B.side() != Side::left) {
    throw std::invalid_argument("check_condition: conditions are stated for left S-posets");
  }
  Pomonoid const&   S = *B.monoid();
  std::size_t const n = S.size();
  std::size_t const m = B.size();

  if (c == Condition::SF) {
    Verdict p = check_condition(B, Condition::P);
    Verdict e = check_condition(B, Condition::E);
    Verdict v{p.holds && e.holds, std::nullopt, std::move(p.witnesses)};
    v.witnesses.insert(v.witnesses.end(), e.witnesses.begin(), e.witnesses.end());
    if (!p.holds) {
      v.counterexample = p.counterexample;
    } else if (!e.holds) {
      v.counterexample = e.counterexample;
    }
    return v;
  }

  auto premises4 = [&](auto&& premise_holds) {  // (s, s', b, b')
    std::vector<Premise> out;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t s2 = 0; s2 < n; ++s2) {
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t b2 = 0; b2 < m; ++b2) {
            if (premise_holds(s, s2, b, b2)) {
              out.push_back({s, s2, b, b2});
            }
          }
        }
      }
    }
    return out;
  };
  auto premises3 = [&](auto&& premise_holds) {  // (s, s', b)
    std::vector<Premise> out;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t s2 = 0; s2 < n; ++s2) {
        for (std::size_t b = 0; b < m; ++b) {
          if (premise_holds(s, s2, b)) {
            out.push_back({s, s2, b});
          }
        }
      }
    }
    return out;
  };
  auto premises_same_s = [&](auto&& premise_holds) {  // (s, b, b')
    std::vector<Premise> out;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t b2 = 0; b2 < m; ++b2) {
          if (premise_holds(s, b, b2)) {
            out.push_back({s, b, b2});
          }
        }
      }
    }
    return out;
  };

  // Witness searches, all (b'' outermost, then the monoid coefficients).
  auto search_uu = [&](auto&& fits) -> std::optional<Witness> {
    for (std::size_t bw = 0; bw < m; ++bw) {
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t u2 = 0; u2 < n; ++u2) {
          if (fits(bw, u, u2)) {
            return Witness{bw, u, u2};
          }
        }
      }
    }
    return std::nullopt;
  };
  auto const ideals = right_ideal_lists(S);
  auto search_pp = [&](std::size_t s, std::size_t s2, auto&& fits) -> std::optional<Witness> {
    for (std::size_t bw = 0; bw < m; ++bw) {
      for (std::size_t p : ideals[s]) {
        for (std::size_t p2 : ideals[s2]) {
          if (S.leq(p, p2) && fits(bw, p, p2)) {
            return Witness{bw, p, p2};
          }
        }
      }
    }
    return std::nullopt;
  };

  switch (c) {
    case Condition::P:
      return run_check(
          premises4([&](std::size_t s, std::size_t s2, std::size_t b, std::size_t b2) {
            return B.leq(B.act(s, b), B.act(s2, b2));
          }),
          [&](Premise const& pr) {
            auto const [s, s2, b, b2] = std::tuple{pr[0], pr[1], pr[2], pr[3]};
            return search_uu([&](std::size_t bw, std::size_t u, std::size_t u2) {
              return B.act(u, bw) == b && B.act(u2, bw) == b2
                     && S.leq(S.mul(s, u), S.mul(s2, u2));
            });
          });
    case Condition::E:
      return run_check(
          premises3([&](std::size_t s, std::size_t s2, std::size_t b) {
            return B.leq(B.act(s, b), B.act(s2, b));
          }),
          [&](Premise const& pr) -> std::optional<Witness> {
            auto const [s, s2, b] = std::tuple{pr[0], pr[1], pr[2]};
            for (std::size_t bw = 0; bw < m; ++bw) {
              for (std::size_t u = 0; u < n; ++u) {
                if (B.act(u, bw) == b && S.leq(S.mul(s, u), S.mul(s2, u))) {
                  return Witness{bw, u};
                }
              }
            }
            return std::nullopt;
          });
    case Condition::EP:
      return run_check(
          premises3([&](std::size_t s, std::size_t s2, std::size_t b) {
            return B.leq(B.act(s, b), B.act(s2, b));
          }),
          [&](Premise const& pr) {
            auto const [s, s2, b] = std::tuple{pr[0], pr[1], pr[2]};
            return search_uu([&](std::size_t bw, std::size_t u, std::size_t u2) {
              return B.act(u, bw) == b && B.act(u2, bw) == b
                     && S.leq(S.mul(s, u), S.mul(s2, u2));
            });
          });
    case Condition::Pw:
      return run_check(
          premises4([&](std::size_t s, std::size_t s2, std::size_t b, std::size_t b2) {
            return B.leq(B.act(s, b), B.act(s2, b2));
          }),
          [&](Premise const& pr) {
            auto const [s, s2, b, b2] = std::tuple{pr[0], pr[1], pr[2], pr[3]};
            return search_uu([&](std::size_t bw, std::size_t u, std::size_t u2) {
              return B.leq(b, B.act(u, bw)) && B.leq(B.act(u2, bw), b2)
                     && S.leq(S.mul(s, u), S.mul(s2, u2));
            });
          });
    case Condition::W:
      return run_check(
          premises4([&](std::size_t s, std::size_t s2, std::size_t b, std::size_t b2) {
            return B.leq(B.act(s, b), B.act(s2, b2));
          }),
          [&](Premise const& pr) {
            auto const [s, s2, b, b2] = std::tuple{pr[0], pr[1], pr[2], pr[3]};
            return search_pp(s, s2, [&](std::size_t bw, std::size_t p, std::size_t p2) {
              return B.leq(B.act(s, b), B.act(p, bw))
                     && B.leq(B.act(p2, bw), B.act(s2, b2));
            });
          });
    case Condition::U_literal:
      return run_check(
          premises4([&](std::size_t s, std::size_t, std::size_t b, std::size_t b2) {
            return B.act(s, b) == B.act(s, b2);
          }),
          [&](Premise const& pr) {
            auto const [s, s2, b, b2] = std::tuple{pr[0], pr[1], pr[2], pr[3]};
            return search_pp(s, s2, [&](std::size_t bw, std::size_t p, std::size_t p2) {
              std::size_t const sb = B.act(s, b);
              return sb == B.act(p, bw) && sb == B.act(p2, bw) && sb == B.act(s2, b2);
            });
          });
    case Condition::U_amended:
      return run_check(
          premises4([&](std::size_t s, std::size_t s2, std::size_t b, std::size_t b2) {
            return B.act(s, b) == B.act(s2, b2);
          }),
          [&](Premise const& pr) {
            auto const [s, s2, b, b2] = std::tuple{pr[0], pr[1], pr[2], pr[3]};
            return search_pp(s, s2, [&](std::size_t bw, std::size_t p, std::size_t p2) {
              std::size_t const sb = B.act(s, b);
              return sb == B.act(p, bw) && sb == B.act(p2, bw) && sb == B.act(s2, b2);
            });
          });
    case Condition::PWP:
      return run_check(
          premises_same_s([&](std::size_t s, std::size_t b, std::size_t b2) {
            return B.leq(B.act(s, b), B.act(s, b2));
          }),
          [&](Premise const& pr) {
            auto const [s, b, b2] = std::tuple{pr[0], pr[1], pr[2]};
            return search_uu([&](std::size_t bw, std::size_t u, std::size_t u2) {
              return B.act(u, bw) == b && B.act(u2, bw) == b2
                     && S.leq(S.mul(s, u), S.mul(s, u2));
            });
          });
    case Condition::PWPw:
      return run_check(
          premises_same_s([&](std::size_t s, std::size_t b, std::size_t b2) {
            return B.leq(B.act(s, b), B.act(s, b2));
          }),
          [&](Premise const& pr) {
            auto const [s, b, b2] = std::tuple{pr[0], pr[1], pr[2]};
            return search_uu([&](std::size_t bw, std::size_t u, std::size_t u2) {
              return B.leq(b, B.act(u, bw)) && B.leq(B.act(u2, bw), b2)
                     && S.leq(S.mul(s, u), S.mul(s, u2));
            });
          });
    default:
      throw std::logic_error("check_condition: unhandled condition");
  }
}

std::map<Condition, bool> condition_signature(SPoset const& B) {
  std::map<Condition, bool> out;
  for (Condition c : all_conditions()) {
    out[c] = check_condition(B, c).holds;
  }
  return out;
}

}  // namespace sposet
