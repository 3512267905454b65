#include <cstddef>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "sposet/conditions.hpp"
#include "sposet/flatness.hpp"
#include "sposet/relation.hpp"
#include "sposet/search.hpp"
#include "sposet/sposet.hpp"
#include "sposet/tensor.hpp"

namespace {

using namespace sposet;

//! Two-element semilattice {1, e} with e < 1 — the workhorse monoid.
PomonoidPtr semilattice2() {
  Relation leq = Relation::identity(2);
  leq.set(1, 0);
  return make_pomonoid(2, {0, 1, 1, 1}, 0, leq, {"1", "e"});
}

//! Sparse digraph on n nodes: a cycle plus skip edges, n^2-dense closure.
Relation skip_cycle(std::size_t n) {
  Relation r = Relation::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, (i + 1) % n);
    r.set(i, (i + 7) % n);
  }
  return r;
}

void BM_TransitiveClosure(benchmark::State& state) {
  std::size_t const n    = static_cast<std::size_t>(state.range(0));
  Relation const    base = skip_cycle(n);
  for (auto _ : state) {
    Relation r = base;
    r.transitive_close();
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_TransitiveClosure)->Arg(32)->Arg(128);

void BM_TensorProduct(benchmark::State& state) {
  PomonoidPtr const S = semilattice2();
  SPoset const      A = free_act(S, Side::right, 2);
  SPoset const      B = free_act(S, Side::left, 2);
  for (auto _ : state) {
    TensorPoset T = tensor_product(A, B);
    benchmark::DoNotOptimize(T);
  }
}
BENCHMARK(BM_TensorProduct);

void BM_ConditionCheck(benchmark::State& state) {
  PomonoidPtr const S = semilattice2();
  SPoset const      B = free_act(S, Side::left, 2);
  for (auto _ : state) {
    Verdict v = check_condition(B, Condition::P);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ConditionCheck);

void BM_StandardQuotientFamily(benchmark::State& state) {
  PomonoidPtr const S = semilattice2();
  std::size_t const max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    StandardQuotientFamily family(S, max_len, /*doubled=*/false);
    benchmark::DoNotOptimize(family);
  }
}
BENCHMARK(BM_StandardQuotientFamily)->Arg(4)->Arg(6);

void BM_EnumerateSposets(benchmark::State& state) {
  PomonoidPtr const S = semilattice2();
  std::size_t const m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto family = enumerate_sposets(S, m, Side::left);
    benchmark::DoNotOptimize(family);
  }
}
BENCHMARK(BM_EnumerateSposets)->Arg(3)->Arg(4);

void BM_Audit(benchmark::State& state) {
  PomonoidPtr const S = semilattice2();
  for (auto _ : state) {
    AuditReport report = implication_audit(S, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Audit)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
