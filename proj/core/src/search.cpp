#include "sposet/search.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <thread>

#include "sposet/conditions.hpp"
#include "sposet/flatness.hpp"
#include "sposet/relation.hpp"
#include "sposet/structure.hpp"

namespace sposet {

namespace {

// ---------------------------------------------------------------------
// Partial-order generation (cached per size)
// ---------------------------------------------------------------------

//! All partial orders on {0, ..., m-1} as m*m row-major matrices, in a
//! deterministic order (by the subset counter over off-diagonal pairs).
std::vector<std::vector<char>> const& partial_orders(std::size_t m) {
  static std::map<std::size_t, std::vector<std::vector<char>>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::size_t const bits = offdiag.size();
  // Index of the transposed pair, for the antisymmetry pre-check.
  std::vector<std::size_t> flip(bits);
  for (std::size_t b = 0; b < bits; ++b)
    for (std::size_t c = 0; c < bits; ++c)
      if (offdiag[c].first == offdiag[b].second && offdiag[c].second == offdiag[b].first)
        flip[b] = c;

  std::vector<std::vector<char>> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
    bool antisymmetric = true;
    for (std::size_t b = 0; b < bits && antisymmetric; ++b)
      if ((mask >> b & 1) && (mask >> flip[b] & 1)) antisymmetric = false;
    if (!antisymmetric) continue;
    std::vector<char> mat(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) mat[i * m + i] = 1;
    for (std::size_t b = 0; b < bits; ++b)
      if (mask >> b & 1) mat[offdiag[b].first * m + offdiag[b].second] = 1;
    bool transitive = true;
    for (std::size_t i = 0; i < m && transitive; ++i)
      for (std::size_t j = 0; j < m && transitive; ++j) {
        if (!mat[i * m + j]) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (mat[j * m + k] && !mat[i * m + k]) {
            transitive = false;
            break;
          }
      }
    if (transitive) result.push_back(std::move(mat));
  }
  return cache.emplace(m, std::move(result)).first->second;
}

Relation relation_from_matrix(std::size_t m, std::vector<char> const& mat) {
  Relation rel(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (mat[i * m + j]) rel.set(i, j);
  return rel;
}

}  // namespace

// ---------------------------------------------------------------------
// Pomonoid enumeration
// ---------------------------------------------------------------------

std::vector<Pomonoid> enumerate_pomonoids(std::size_t n) {
  if (n == 0 || n > 4)
    throw std::invalid_argument("enumerate_pomonoids: size must be between 1 and 4");

  // Canonical key: multiplication table then order matrix, flattened,
  // minimised over relabellings that fix the identity (index 0).
  std::vector<std::vector<std::size_t>> perms;
  {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }

  std::set<std::vector<std::size_t>> keys;
  std::vector<std::size_t>           mul(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) mul[j] = j;       // 1 * b = b
  for (std::size_t i = 0; i < n; ++i) mul[i * n] = i;   // a * 1 = a

  std::size_t const        cells = (n - 1) * (n - 1);
  std::vector<std::size_t> cell(cells, 0);
  while (true) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) mul[i * n + j] = cell[(i - 1) * (n - 1) + (j - 1)];
    bool associative = true;
    for (std::size_t i = 0; i < n && associative; ++i)
      for (std::size_t j = 0; j < n && associative; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (mul[mul[i * n + j] * n + k] != mul[i * n + mul[j * n + k]]) {
            associative = false;
            break;
          }
    if (associative) {
      for (std::vector<char> const& ord : partial_orders(n)) {
        bool compatible = true;
        for (std::size_t a = 0; a < n && compatible; ++a)
          for (std::size_t b = 0; b < n && compatible; ++b) {
            if (!ord[a * n + b]) continue;
            for (std::size_t c = 0; c < n; ++c)
              if (!ord[mul[c * n + a] * n + mul[c * n + b]] ||
                  !ord[mul[a * n + c] * n + mul[b * n + c]]) {
                compatible = false;
                break;
              }
          }
        if (!compatible) continue;
        std::vector<std::size_t> best;
        for (auto const& perm : perms) {
          std::vector<std::size_t> key(2 * n * n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              key[perm[i] * n + perm[j]]         = perm[mul[i * n + j]];
              key[n * n + perm[i] * n + perm[j]] = ord[i * n + j];
            }
          if (best.empty() || key < best) best = std::move(key);
        }
        keys.insert(std::move(best));
      }
    }
    // advance the table odometer
    std::size_t pos = 0;
    while (pos < cells && cell[pos] == n - 1) cell[pos++] = 0;
    if (pos == cells) break;
    ++cell[pos];
  }

  std::vector<Pomonoid> result;
  for (std::vector<std::size_t> const& key : keys) {
    std::vector<std::size_t> table(key.begin(), key.begin() + n * n);
    Relation                 leq(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (key[n * n + i * n + j]) leq.set(i, j);
    result.push_back(*make_pomonoid(n, std::move(table), 0, std::move(leq)));
  }
  return result;
}

// ---------------------------------------------------------------------
// S-poset enumeration
// ---------------------------------------------------------------------

std::vector<SPoset> enumerate_sposets(PomonoidPtr S, std::size_t m, Side side) {
  if (!S) throw std::invalid_argument("enumerate_sposets: null monoid");
  if (m == 0 || m > 5)
    throw std::invalid_argument("enumerate_sposets: size must be between 1 and 5");
  std::size_t const n   = S->size();
  std::size_t const one = S->one();

  std::vector<std::size_t> others;
  for (std::size_t s = 0; s < n; ++s)
    if (s != one) others.push_back(s);

  std::size_t map_count = 1;  // m^m
  for (std::size_t i = 0; i < m; ++i) map_count *= m;

  std::vector<std::vector<std::size_t>> perms;
  {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::set<std::vector<std::size_t>> keys;

  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) act[one][a] = a;

  std::vector<std::size_t> code(others.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < others.size(); ++i) {
      std::size_t c = code[i];
      for (std::size_t a = 0; a < m; ++a) {
        act[others[i]][a] = c % m;
        c /= m;
      }
    }
    // composition: (st)·a = s·(t·a) on the left, a·(st) = (a·s)·t on the right
    bool composes = true;
    for (std::size_t s = 0; s < n && composes; ++s)
      for (std::size_t t = 0; t < n && composes; ++t) {
        std::size_t st = S->mul(s, t);
        for (std::size_t a = 0; a < m; ++a) {
          std::size_t lhs = act[st][a];
          std::size_t rhs = side == Side::left ? act[s][act[t][a]] : act[t][act[s][a]];
          if (lhs != rhs) {
            composes = false;
            break;
          }
        }
      }
    if (composes) {
      for (std::vector<char> const& ord : partial_orders(m)) {
        bool monotone = true;
        for (std::size_t s = 0; s < n && monotone; ++s)
          for (std::size_t a = 0; a < m && monotone; ++a)
            for (std::size_t b = 0; b < m; ++b)
              if (ord[a * m + b] && !ord[act[s][a] * m + act[s][b]]) {
                monotone = false;
                break;
              }
        for (std::size_t s = 0; s < n && monotone; ++s)
          for (std::size_t t = 0; t < n && monotone; ++t) {
            if (!S->leq(s, t)) continue;
            for (std::size_t a = 0; a < m; ++a)
              if (!ord[act[s][a] * m + act[t][a]]) {
                monotone = false;
                break;
              }
          }
        if (!monotone) continue;
        std::vector<std::size_t> best;
        for (auto const& perm : perms) {
          std::vector<std::size_t> key(n * m + m * m);
          for (std::size_t s = 0; s < n; ++s)
            for (std::size_t a = 0; a < m; ++a) key[s * m + perm[a]] = perm[act[s][a]];
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
              key[n * m + perm[a] * m + perm[b]] = ord[a * m + b];
          if (best.empty() || key < best) best = std::move(key);
        }
        keys.insert(std::move(best));
      }
    }
    std::size_t pos = 0;
    while (pos < code.size() && code[pos] == map_count - 1) code[pos++] = 0;
    if (pos == code.size()) break;
    ++code[pos];
  }

  std::vector<SPoset> result;
  for (std::vector<std::size_t> const& key : keys) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(m));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t a = 0; a < m; ++a) table[s][a] = key[s * m + a];
    Relation leq(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (key[n * m + a * m + b]) leq.set(a, b);
    result.push_back(make_sposet(S, side, std::move(table), std::move(leq)));
  }
  return result;
}

// ---------------------------------------------------------------------
// Class membership
// ---------------------------------------------------------------------

namespace {

std::vector<std::string> const kClassNames = {
    "P",  "E",  "SF",   "EP",  "Pw", "W",  "U",     "Uam",
    "PWP", "PWPw", "PWF", "WF", "PWPF", "WPF", "Fr", "Pr",
    "FlatB", "PoFlatB"};

}  // namespace

std::string const& class_id_name(ClassId cls) {
  return kClassNames[static_cast<std::size_t>(cls)];
}

ClassId class_id_from_name(std::string const& name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (kClassNames[i] == name) return static_cast<ClassId>(i);
  if (name == "U_literal") return ClassId::U_literal;
  if (name == "U_amended") return ClassId::U_amended;
  throw std::invalid_argument("unknown class \"" + name + "\"");
}

std::vector<ClassId> const& all_class_ids() {
  static std::vector<ClassId> const ids = [] {
    std::vector<ClassId> out;
    for (std::size_t i = 0; i < kClassNames.size(); ++i)
      out.push_back(static_cast<ClassId>(i));
    return out;
  }();
  return ids;
}

bool evaluate_class(SPoset const& B, ClassId cls, std::size_t skeleton_bound) {
  switch (cls) {
    case ClassId::P: return check_condition(B, Condition::P).holds;
    case ClassId::E: return check_condition(B, Condition::E).holds;
    case ClassId::SF: return check_condition(B, Condition::SF).holds;
    case ClassId::EP: return check_condition(B, Condition::EP).holds;
    case ClassId::Pw: return check_condition(B, Condition::Pw).holds;
    case ClassId::W: return check_condition(B, Condition::W).holds;
    case ClassId::U_literal: return check_condition(B, Condition::U_literal).holds;
    case ClassId::U_amended: return check_condition(B, Condition::U_amended).holds;
    case ClassId::PWP: return check_condition(B, Condition::PWP).holds;
    case ClassId::PWPw: return check_condition(B, Condition::PWPw).holds;
    case ClassId::PWF: return check_ideal_flatness(B, IdealVariant::PWF).ok();
    case ClassId::WF: return check_ideal_flatness(B, IdealVariant::WF).ok();
    case ClassId::PWPF: return check_ideal_flatness(B, IdealVariant::PWPF).ok();
    case ClassId::WPF: return check_ideal_flatness(B, IdealVariant::WPF).ok();
    case ClassId::Fr: return is_free(B).free;
    case ClassId::Pr: return is_projective(B).projective;
    case ClassId::FlatBounded: return check_flat_bounded(B, false, skeleton_bound).ok();
    case ClassId::PoFlatBounded: return check_flat_bounded(B, true, skeleton_bound).ok();
  }
  throw std::logic_error("evaluate_class: unreachable");
}

// ---------------------------------------------------------------------
// Implication audit
// ---------------------------------------------------------------------

namespace {

//! Internal digraph nodes.  WP and WPw (the subpullback conditions) and
//! exact flatness F / po-flatness PF have no exact checker; they exist so
//! composite arrows through them survive the closure.
enum Node : std::size_t {
  nFr,
  nPr,
  nSF,
  nP,
  nE,
  nEP,
  nPw,
  nW,
  nPWP,
  nPWPw,
  nWP,
  nWPw,
  nPF,
  nF,
  nWPF,
  nPWPF,
  nWF,
  nPWF,
  nNodeCount,
};

std::vector<Arrow> build_audited_arrows() {
  // Known implications between the classes: the four-row grid of strict
  // implications from freeness down to principal weak flatness, plus the
  // definitional ones (SF = P and E; E or P specialise to EP by reusing
  // the witness; a Pw witness multiplied by s / t is a W witness).
  static std::pair<Node, Node> const base[] = {
      {nFr, nPr},     {nPr, nSF},    {nSF, nP},      {nP, nWP},     {nWP, nPWP},
      {nP, nPw},      {nWP, nWPw},   {nPWP, nPWPw},  {nPw, nWPw},   {nWPw, nPWPw},
      {nPw, nPF},     {nWPw, nWPF},  {nPWPw, nPWPF}, {nPF, nWPF},   {nWPF, nPWPF},
      {nPF, nF},      {nWPF, nWF},   {nPWPF, nPWF},  {nF, nWF},     {nWF, nPWF},
      {nSF, nE},      {nE, nEP},     {nP, nEP},      {nPw, nW},
  };
  bool reach[nNodeCount][nNodeCount] = {};
  for (auto const& [from, to] : base) reach[from][to] = true;
  for (std::size_t k = 0; k < nNodeCount; ++k)
    for (std::size_t i = 0; i < nNodeCount; ++i)
      for (std::size_t j = 0; j < nNodeCount; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  auto source_class = [](std::size_t node) -> std::optional<ClassId> {
    switch (node) {
      case nFr: return ClassId::Fr;
      case nPr: return ClassId::Pr;
      case nSF: return ClassId::SF;
      case nP: return ClassId::P;
      case nE: return ClassId::E;
      case nEP: return ClassId::EP;
      case nPw: return ClassId::Pw;
      case nW: return ClassId::W;
      case nPWP: return ClassId::PWP;
      case nPWPw: return ClassId::PWPw;
      case nWPF: return ClassId::WPF;
      case nPWPF: return ClassId::PWPF;
      case nWF: return ClassId::WF;
      case nPWF: return ClassId::PWF;
      default: return std::nullopt;  // WP, WPw, F, PF: no exact checker
    }
  };
  auto target_class = [&](std::size_t node) -> std::optional<ClassId> {
    if (node == nF) return ClassId::FlatBounded;
    if (node == nPF) return ClassId::PoFlatBounded;
    return source_class(node);
  };

  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < nNodeCount; ++i)
    for (std::size_t j = 0; j < nNodeCount; ++j) {
      if (i == j || !reach[i][j]) continue;
      auto from = source_class(i);
      auto to   = target_class(j);
      if (from && to) arrows.push_back(Arrow{*from, *to});
    }
  std::sort(arrows.begin(), arrows.end());
  return arrows;
}

}  // namespace

std::vector<Arrow> const& audited_arrows() {
  static std::vector<Arrow> const arrows = build_audited_arrows();
  return arrows;
}

AuditReport implication_audit(PomonoidPtr S, std::size_t max_size,
                              std::size_t skeleton_bound, std::size_t jobs) {
  if (!S) throw std::invalid_argument("implication_audit: null monoid");
  AuditReport report;
  for (std::size_t m = 1; m <= max_size; ++m)
    for (SPoset& B : enumerate_sposets(S, m, Side::left))
      report.family.push_back(std::move(B));
  report.instances_checked = report.family.size();

  StandardQuotientFamily const doubled_family(S, skeleton_bound, true);
  StandardQuotientFamily const single_family(S, skeleton_bound, false);

  std::size_t const      class_count = all_class_ids().size();
  std::vector<std::vector<char>> values(report.family.size(),
                                        std::vector<char>(class_count, 0));
  auto evaluate_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SPoset const& B = report.family[i];
      for (ClassId cls : all_class_ids()) {
        bool value;
        if (cls == ClassId::FlatBounded)
          value = check_flat_bounded(B, false, doubled_family).ok();
        else if (cls == ClassId::PoFlatBounded)
          value = check_flat_bounded(B, true, single_family).ok();
        else
          value = evaluate_class(B, cls, skeleton_bound);
        values[i][static_cast<std::size_t>(cls)] = value ? 1 : 0;
      }
    }
  };
  if (jobs <= 1 || report.family.size() < 2) {
    evaluate_range(0, report.family.size());
  } else {
    std::size_t const        workers = std::min(jobs, report.family.size());
    std::vector<std::thread> pool;
    std::size_t const        chunk = (report.family.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end   = std::min(begin + chunk, report.family.size());
      if (begin < end) pool.emplace_back(evaluate_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < report.family.size(); ++i) {
    for (Arrow const& arrow : audited_arrows()) {
      bool stronger = values[i][static_cast<std::size_t>(arrow.stronger)] != 0;
      bool weaker   = values[i][static_cast<std::size_t>(arrow.weaker)] != 0;
      if (stronger && !weaker) report.violations.emplace_back(arrow, i);
      if (weaker && !stronger && !report.strictness_witnesses.count(arrow))
        report.strictness_witnesses.emplace(arrow, i);
    }
  }
  return report;
}

std::optional<SPoset> counterexample_search(PomonoidPtr S, std::size_t max_size,
                                            ClassId stronger, ClassId weaker,
                                            std::size_t skeleton_bound) {
  if (!S) throw std::invalid_argument("counterexample_search: null monoid");
  for (std::size_t m = 1; m <= max_size; ++m)
    for (SPoset const& B : enumerate_sposets(S, m, Side::left))
      if (evaluate_class(B, weaker, skeleton_bound) &&
          !evaluate_class(B, stronger, skeleton_bound))
        return B;
  return std::nullopt;
}

}  // namespace sposet
