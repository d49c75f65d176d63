#include <benchmark/benchmark.h>

#include <random>

#include "linkinv/alexander.hpp"
#include "linkinv/braid.hpp"
#include "linkinv/fox.hpp"
#include "linkinv/laurent.hpp"
#include "linkinv/quotients.hpp"

using namespace linkinv;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int nv, int terms, int span) {
  LaurentPoly p(nv);
  for (int k = 0; k < terms; ++k) {
    Exponents e(nv);
    for (int& x : e) x = static_cast<int>(rng() % (2 * span + 1)) - span;
    p.add_term(e, static_cast<long long>(rng() % 19) - 9);
  }
  return p;
}

PolyMatrix random_matrix(std::mt19937& rng, int n, int nv) {
  PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(nv)));
  for (auto& row : m) {
    for (auto& entry : row) entry = random_poly(rng, nv, 3, 2);
  }
  return m;
}

void BM_poly_mul(benchmark::State& state) {
  std::mt19937 rng(1);
  const LaurentPoly a = random_poly(rng, 2, 40, 8);
  const LaurentPoly b = random_poly(rng, 2, 40, 8);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_poly_mul);

void BM_det_cofactor(benchmark::State& state) {
  std::mt19937 rng(2);
  const PolyMatrix m = random_matrix(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_cofactor(m));
}
BENCHMARK(BM_det_cofactor)->Arg(3)->Arg(4);

void BM_det_bareiss(benchmark::State& state) {
  std::mt19937 rng(2);
  const PolyMatrix m = random_matrix(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_det_bareiss)->Arg(3)->Arg(4);

void BM_alexander_minor(benchmark::State& state) {
  const BraidWord b = torus_braid(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_from_braid(b));
}
BENCHMARK(BM_alexander_minor)->Arg(3)->Arg(5);

void BM_alexander_burau(benchmark::State& state) {
  const BraidWord b = torus_braid(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_burau(b));
}
BENCHMARK(BM_alexander_burau)->Arg(3)->Arg(5);

void BM_hom_count_a5(benchmark::State& state) {
  const GroupPresentation tref = closure_presentation(BraidWord{2, {1, 1, 1}});
  const FiniteGroupTable a5 = FiniteGroupTable::alternating(5);
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(tref, a5));
}
BENCHMARK(BM_hom_count_a5);

}  // namespace

BENCHMARK_MAIN();
