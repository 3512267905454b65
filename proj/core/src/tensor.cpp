#include "sposet/tensor.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sposet {

void Skeleton::check(std::size_t monoid_size) const {
  auto check_half = [&](std::vector<std::size_t> const& half) {
    if (half.empty() || half.size() % 2 != 0) {
      throw std::invalid_argument("skeleton: each half needs positive even length");
    }
    for (std::size_t v : half) {
      if (v >= monoid_size) {
        throw std::invalid_argument("skeleton: entry out of range");
      }
    }
  };
  check_half(first);
  if (doubled()) {
    check_half(second);
  }
}

bool Skeleton::operator<(Skeleton const& other) const {
  if (flat_length() != other.flat_length()) {
    return flat_length() < other.flat_length();
  }
  if (first.size() != other.first.size()) {
    return first.size() < other.first.size();
  }
  if (first != other.first) {
    return first < other.first;
  }
  return second < other.second;
}

std::vector<Skeleton> enumerate_skeletons(std::size_t monoid_size,
                                          std::size_t max_flat_len,
                                          bool        doubled) {
  std::vector<Skeleton> out;
  auto emit_sequences = [&](std::size_t total, std::size_t first_len) {
    std::vector<std::size_t> seq(total, 0);
    while (true) {
      Skeleton sk;
      sk.first.assign(seq.begin(), seq.begin() + first_len);
      sk.second.assign(seq.begin() + first_len, seq.end());
      out.push_back(std::move(sk));
      std::size_t i = total;
      while (i > 0) {
        --i;
        if (++seq[i] < monoid_size) {
          break;
        }
        seq[i] = 0;
        if (i == 0) {
          return;
        }
      }
    }
  };
  if (doubled) {
    for (std::size_t total = 4; total <= max_flat_len; total += 2) {
      for (std::size_t first_len = 2; first_len + 2 <= total; first_len += 2) {
        emit_sequences(total, first_len);
      }
    }
  } else {
    for (std::size_t total = 2; total <= max_flat_len; total += 2) {
      emit_sequences(total, total);
    }
  }
  return out;
}

namespace {

QuotientSPoset build_tensor_congruence(SPoset const& A, SPoset const& B) {
  if (A.side() != Side::right || B.side() != Side::left) {
    throw std::invalid_argument("tensor: need a right poset on the left and a left poset on the right");
  }
  SPoset const prod = trivial_product_act(A, B);
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  std::size_t const nB = B.size();
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t s = 0; s < A.monoid()->size(); ++s) {
      for (std::size_t b = 0; b < nB; ++b) {
        // (a·s) ⊗ b and a ⊗ (s·b) are identified, so relate both ways.
        std::size_t const u = A.act(s, a) * nB + b;
        std::size_t const v = a * nB + B.act(s, b);
        swaps.emplace_back(u, v);
        swaps.emplace_back(v, u);
      }
    }
  }
  return order_congruence(prod, swaps);
}

}  // namespace

TensorPoset::TensorPoset(SPoset A, SPoset B)
    : _A(std::move(A)), _B(std::move(B)), _q(build_tensor_congruence(_A, _B)) {}

TensorPoset tensor_product(SPoset const& A, SPoset const& B) {
  return TensorPoset(A, B);
}

bool tensor_leq(TensorPoset const& T, std::pair<std::size_t, std::size_t> p,
                std::pair<std::size_t, std::size_t> q) {
  if (p.first >= T.left().size() || q.first >= T.left().size()
      || p.second >= T.right().size() || q.second >= T.right().size()) {
    throw std::invalid_argument("tensor_leq: pair out of range");
  }
  return T.pair_preorder()(T.pair_index(p.first, p.second), T.pair_index(q.first, q.second));
}

namespace {

// A step along the closure path: move within the product order, or swap a
// coefficient between the factors.  swap_ba pulls s out of the B component
// ((a, s·b) -> (a·s, b), the row-opening move); swap_ab pushes it back
// ((a·t, b) -> (a, t·b), the row-closing move).
enum class StepKind { order, swap_ba, swap_ab };

struct Step {
  StepKind    kind;
  std::size_t s;  // swap coefficient (unused for order steps)
  std::size_t a;  // position after the step
  std::size_t b;
};

std::optional<std::vector<Step>> shortest_path(SPoset const& A, SPoset const& B,
                                               std::pair<std::size_t, std::size_t> p,
                                               std::pair<std::size_t, std::size_t> q) {
  std::size_t const nA  = A.size();
  std::size_t const nB  = B.size();
  std::size_t const n   = A.monoid()->size();
  std::size_t const src = p.first * nB + p.second;
  std::size_t const dst = q.first * nB + q.second;

  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nA * nB, unseen);
  std::vector<Step>        via(nA * nB);
  std::deque<std::size_t>  queue;
  parent[src] = src;
  queue.push_back(src);

  while (!queue.empty() && parent[dst] == unseen) {
    std::size_t const cur = queue.front();
    queue.pop_front();
    std::size_t const a = cur / nB;
    std::size_t const b = cur % nB;
    auto visit = [&](std::size_t na, std::size_t nb, StepKind kind, std::size_t s) {
      std::size_t const node = na * nB + nb;
      if (parent[node] == unseen) {
        parent[node] = cur;
        via[node]    = {kind, s, na, nb};
        queue.push_back(node);
      }
    };
    for (std::size_t na = 0; na < nA; ++na) {
      if (!A.leq(a, na)) {
        continue;
      }
      for (std::size_t nb = 0; nb < nB; ++nb) {
        if (B.leq(b, nb) && (na != a || nb != b)) {
          visit(na, nb, StepKind::order, 0);
        }
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t bb = 0; bb < nB; ++bb) {
        if (B.act(s, bb) == b) {
          visit(A.act(s, a), bb, StepKind::swap_ba, s);
        }
      }
      for (std::size_t aa = 0; aa < nA; ++aa) {
        if (A.act(s, aa) == a) {
          visit(aa, B.act(s, b), StepKind::swap_ab, s);
        }
      }
    }
  }
  if (parent[dst] == unseen) {
    return std::nullopt;
  }
  std::vector<Step> path;
  for (std::size_t node = dst; node != src; node = parent[node]) {
    path.push_back(via[node]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<TossingCertificate> extract_tossing(TensorPoset const&                  T,
                                                  std::pair<std::size_t, std::size_t> p,
                                                  std::pair<std::size_t, std::size_t> q) {
  if (!tensor_leq(T, p, q)) {
    return std::nullopt;
  }
  SPoset const&     A   = T.left();
  SPoset const&     B   = T.right();
  std::size_t const one = A.monoid()->one();

  auto path = shortest_path(A, B, p, q);
  if (!path) {
    // Q is precisely the reachability relation of the step graph, so a
    // missing path would contradict tensor_leq.
    throw std::logic_error("extract_tossing: preorder and step graph disagree");
  }

  // Normalise the path into tossing rows.  Row i opens with a swap_ba
  // carrying s_i (fixing b_i) and closes with a swap_ab carrying t_i (fixing
  // a_{i+1}); order movement on the A side lives inside a row, order
  // movement on the B side between rows.  Where the path deviates, an
  // identity-coefficient half-row is inserted — a swap with coefficient 1
  // stays at the same pair, so this never changes the endpoints.
  struct Row {
    std::size_t s, t, b, a_next;
  };
  std::vector<Row> rows;
  std::size_t      cur_a  = p.first;
  std::size_t      cur_b  = p.second;
  bool             in_row = false;
  Row              pending{};

  auto open_row = [&](std::size_t s, std::size_t na, std::size_t nb) {
    pending.s = s;
    pending.b = nb;
    cur_a     = na;
    cur_b     = nb;
    in_row    = true;
  };
  auto close_row = [&](std::size_t t, std::size_t na, std::size_t nb) {
    pending.t      = t;
    pending.a_next = na;
    rows.push_back(pending);
    cur_a  = na;
    cur_b  = nb;
    in_row = false;
  };

  for (Step const& step : *path) {
    switch (step.kind) {
      case StepKind::order:
        if (step.a != cur_a) {
          if (!in_row) {
            open_row(one, cur_a, cur_b);
          }
          cur_a = step.a;
        }
        if (step.b != cur_b) {
          if (in_row) {
            close_row(one, cur_a, cur_b);
          }
          cur_b = step.b;
        }
        break;
      case StepKind::swap_ba:
        if (in_row) {
          close_row(one, cur_a, cur_b);
        }
        open_row(step.s, step.a, step.b);
        break;
      case StepKind::swap_ab:
        if (!in_row) {
          open_row(one, cur_a, cur_b);
        }
        close_row(step.s, step.a, step.b);
        break;
    }
  }
  if (in_row) {
    close_row(one, cur_a, cur_b);
  }
  if (rows.empty()) {
    rows.push_back({one, one, p.second, q.first});
  }

  TossingCertificate cert;
  for (Row const& r : rows) {
    cert.skeleton.first.push_back(r.s);
    cert.skeleton.first.push_back(r.t);
    cert.b_chain.push_back(r.b);
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    cert.a_chain.push_back(rows[i].a_next);
  }
  cert.from       = p;
  cert.to         = q;
  cert.path_steps = path->size();
  return cert;
}

std::optional<TossingCertificate> extract_double_tossing(TensorPoset const& T,
                                                         std::pair<std::size_t, std::size_t> p,
                                                         std::pair<std::size_t, std::size_t> q) {
  auto fwd = extract_tossing(T, p, q);
  auto bwd = extract_tossing(T, q, p);
  if (!fwd || !bwd) {
    return std::nullopt;
  }
  TossingCertificate cert = std::move(*fwd);
  cert.skeleton.second    = std::move(bwd->skeleton.first);
  cert.c_chain            = std::move(bwd->a_chain);
  cert.d_chain            = std::move(bwd->b_chain);
  cert.path_steps += bwd->path_steps;
  return cert;
}

namespace {

// Check one tossing scheme: rows (s_i, t_i) from half, endpoints
// (a, b) -> (a2, b2), interpolants a_chain (a_2..a_m), b_chain (b_1..b_m).
bool verify_half(SPoset const& A, SPoset const& B,
                 std::vector<std::size_t> const& half,
                 std::vector<std::size_t> const& a_chain,
                 std::vector<std::size_t> const& b_chain, std::size_t a, std::size_t b,
                 std::size_t a2, std::size_t b2) {
  std::size_t const m = half.size() / 2;
  auto a_at = [&](std::size_t i) {  // a_i for i in 1..m+1
    if (i == 1) {
      return a;
    }
    return i == m + 1 ? a2 : a_chain[i - 2];
  };
  if (!B.leq(b, B.act(half[0], b_chain[0]))) {
    return false;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t const s_i = half[2 * (i - 1)];
    std::size_t const t_i = half[2 * (i - 1) + 1];
    if (!A.leq(A.act(s_i, a_at(i)), A.act(t_i, a_at(i + 1)))) {
      return false;
    }
    std::size_t const tb = B.act(t_i, b_chain[i - 1]);
    if (i < m) {
      if (!B.leq(tb, B.act(half[2 * i], b_chain[i]))) {
        return false;
      }
    } else if (!B.leq(tb, b2)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool verify_tossing(SPoset const& A, SPoset const& B, TossingCertificate const& cert) {
  if (A.side() != Side::right || B.side() != Side::left || !same_monoid(A.monoid(), B.monoid())) {
    throw std::invalid_argument("verify_tossing: need a right and a left poset over one monoid");
  }
  cert.skeleton.check(A.monoid()->size());
  std::size_t const m = cert.skeleton.rows_first();
  if (cert.b_chain.size() != m || cert.a_chain.size() + 1 != m) {
    throw std::invalid_argument("verify_tossing: chain sizes do not match the skeleton");
  }
  auto check_range = [](std::vector<std::size_t> const& v, std::size_t bound) {
    for (std::size_t x : v) {
      if (x >= bound) {
        throw std::invalid_argument("verify_tossing: chain entry out of range");
      }
    }
  };
  check_range(cert.a_chain, A.size());
  check_range(cert.b_chain, B.size());
  if (cert.from.first >= A.size() || cert.to.first >= A.size()
      || cert.from.second >= B.size() || cert.to.second >= B.size()) {
    throw std::invalid_argument("verify_tossing: endpoint out of range");
  }
  if (cert.skeleton.doubled()) {
    std::size_t const n = cert.skeleton.rows_second();
    if (cert.d_chain.size() != n || cert.c_chain.size() + 1 != n) {
      throw std::invalid_argument("verify_tossing: chain sizes do not match the skeleton");
    }
    check_range(cert.c_chain, A.size());
    check_range(cert.d_chain, B.size());
  } else if (!cert.c_chain.empty() || !cert.d_chain.empty()) {
    throw std::invalid_argument("verify_tossing: return chains on a single skeleton");
  }

  if (!verify_half(A, B, cert.skeleton.first, cert.a_chain, cert.b_chain, cert.from.first,
                   cert.from.second, cert.to.first, cert.to.second)) {
    return false;
  }
  if (cert.skeleton.doubled()
      && !verify_half(A, B, cert.skeleton.second, cert.c_chain, cert.d_chain, cert.to.first,
                      cert.to.second, cert.from.first, cert.from.second)) {
    return false;
  }
  return true;
}

namespace {

// DFS for the epsilon chain interpolants x_2..x_m over a right poset:
// x_1 s_1 <= x_2 t_1, ..., x_m s_m <= x_{m+1} t_m with x_1, x_{m+1} fixed.
bool epsilon_chain(SPoset const& X, std::vector<std::size_t> const& half, std::size_t x,
                   std::size_t x2, std::vector<std::size_t>& witness) {
  std::size_t const m = half.size() / 2;
  witness.assign(m - 1, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t prev) -> bool {
    // prev = x_i; choose x_{i+1} subject to x_i s_i <= x_{i+1} t_i.
    std::size_t const s_i = half[2 * (i - 1)];
    std::size_t const t_i = half[2 * (i - 1) + 1];
    if (i == m) {
      return X.leq(X.act(s_i, prev), X.act(t_i, x2));
    }
    for (std::size_t v = 0; v < X.size(); ++v) {
      if (X.leq(X.act(s_i, prev), X.act(t_i, v))) {
        witness[i - 1] = v;
        if (self(self, i + 1, v)) {
          return true;
        }
      }
    }
    return false;
  };
  return rec(rec, 1, x);
}

// DFS for the theta chain interpolants x_1..x_m over a left poset:
// x <= s_1 x_1, t_1 x_1 <= s_2 x_2, ..., t_m x_m <= x'.
bool theta_chain(SPoset const& X, std::vector<std::size_t> const& half, std::size_t x,
                 std::size_t x2, std::vector<std::size_t>& witness) {
  std::size_t const m = half.size() / 2;
  witness.assign(m, 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    // Choose x_i subject to the constraint linking it to x_{i-1} (or x).
    for (std::size_t v = 0; v < X.size(); ++v) {
      bool ok = i == 1 ? X.leq(x, X.act(half[0], v))
                       : X.leq(X.act(half[2 * i - 3], witness[i - 2]),
                               X.act(half[2 * i - 2], v));
      if (!ok) {
        continue;
      }
      witness[i - 1] = v;
      if (i == m) {
        if (X.leq(X.act(half[2 * m - 1], v), x2)) {
          return true;
        }
      } else if (self(self, i + 1)) {
        return true;
      }
    }
    return false;
  };
  return rec(rec, 1);
}

}  // namespace

FormulaResult eval_skeleton_formula(SkeletonFormula kind, Skeleton const& sk,
                                    SPoset const& X, std::span<std::size_t const> args) {
  sk.check(X.monoid()->size());
  for (std::size_t a : args) {
    if (a >= X.size()) {
      throw std::invalid_argument("eval_skeleton_formula: argument out of range");
    }
  }
  bool const needs_right = kind == SkeletonFormula::epsilon || kind == SkeletonFormula::delta
                           || kind == SkeletonFormula::delta_leq;
  if (needs_right != (X.side() == Side::right)) {
    throw std::invalid_argument("eval_skeleton_formula: formula kind does not match the side");
  }
  bool const needs_doubled = kind == SkeletonFormula::delta || kind == SkeletonFormula::gamma;
  bool const needs_single  = kind == SkeletonFormula::epsilon || kind == SkeletonFormula::theta
                            || kind == SkeletonFormula::delta_leq
                            || kind == SkeletonFormula::gamma_leq;
  if ((needs_doubled && !sk.doubled()) || (needs_single && sk.doubled())) {
    throw std::invalid_argument("eval_skeleton_formula: skeleton shape does not match the kind");
  }

  std::size_t const m = sk.rows_first();
  switch (kind) {
    case SkeletonFormula::epsilon: {
      if (args.size() != m + 1) {
        throw std::invalid_argument("eval_skeleton_formula: epsilon takes m + 1 arguments");
      }
      for (std::size_t i = 1; i <= m; ++i) {
        if (!X.leq(X.act(sk.s1(i - 1), args[i - 1]), X.act(sk.t1(i - 1), args[i]))) {
          return {false, {}};
        }
      }
      return {true, {}};
    }
    case SkeletonFormula::theta: {
      if (args.size() != m + 2) {
        throw std::invalid_argument("eval_skeleton_formula: theta takes m + 2 arguments");
      }
      if (!X.leq(args[0], X.act(sk.s1(0), args[1]))) {
        return {false, {}};
      }
      for (std::size_t i = 1; i < m; ++i) {
        if (!X.leq(X.act(sk.t1(i - 1), args[i]), X.act(sk.s1(i), args[i + 1]))) {
          return {false, {}};
        }
      }
      if (!X.leq(X.act(sk.t1(m - 1), args[m]), args[m + 1])) {
        return {false, {}};
      }
      return {true, {}};
    }
    default:
      break;
  }

  if (args.size() != 2) {
    throw std::invalid_argument("eval_skeleton_formula: existential kinds take 2 arguments");
  }
  std::size_t const x  = args[0];
  std::size_t const x2 = args[1];
  std::vector<std::size_t> w1;
  std::vector<std::size_t> w2;
  bool holds = false;
  switch (kind) {
    case SkeletonFormula::delta:
      holds = epsilon_chain(X, sk.first, x, x2, w1) && epsilon_chain(X, sk.second, x2, x, w2);
      break;
    case SkeletonFormula::gamma:
      holds = theta_chain(X, sk.first, x, x2, w1) && theta_chain(X, sk.second, x2, x, w2);
      break;
    case SkeletonFormula::delta_leq:
      holds = epsilon_chain(X, sk.first, x, x2, w1);
      break;
    case SkeletonFormula::gamma_leq:
      holds = theta_chain(X, sk.first, x, x2, w1);
      break;
    default:
      break;
  }
  if (!holds) {
    return {false, {}};
  }
  w1.insert(w1.end(), w2.begin(), w2.end());
  return {true, std::move(w1)};
}

bool connected_by_skeleton(SPoset const& A, SPoset const& B,
                           std::pair<std::size_t, std::size_t> p,
                           std::pair<std::size_t, std::size_t> q, Skeleton const& sk) {
  std::size_t const a_args[2] = {p.first, q.first};
  std::size_t const b_args[2] = {p.second, q.second};
  if (sk.doubled()) {
    return eval_skeleton_formula(SkeletonFormula::delta, sk, A, a_args).holds
           && eval_skeleton_formula(SkeletonFormula::gamma, sk, B, b_args).holds;
  }
  return eval_skeleton_formula(SkeletonFormula::delta_leq, sk, A, a_args).holds
         && eval_skeleton_formula(SkeletonFormula::gamma_leq, sk, B, b_args).holds;
}

PoMap induced_tensor_map(TensorPoset const& src, TensorPoset const& dst, PoMap const& f) {
  if (!(src.right() == dst.right())) {
    throw std::invalid_argument("induced_tensor_map: right factors must agree");
  }
  if (morphism_kind(src.left(), dst.left(), f) == MapKind::none) {
    throw std::invalid_argument("induced_tensor_map: f is not a pomorphism");
  }
  std::size_t const nB = src.right().size();
  std::vector<std::size_t> images(src.class_count());
  for (std::size_t c = 0; c < src.class_count(); ++c) {
    std::size_t img   = 0;
    bool        first = true;
    for (std::size_t pair : src.classes()[c]) {
      std::size_t const cur = dst.class_of(f(pair / nB), pair % nB);
      if (first) {
        img   = cur;
        first = false;
      } else if (cur != img) {
        // The generators of the source congruence map into the target
        // congruence, so members of one class can never separate.
        throw std::logic_error("induced_tensor_map: image not constant on a class");
      }
    }
    images[c] = img;
  }
  return {std::move(images)};
}

}  // namespace sposet
