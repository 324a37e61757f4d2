// Serial reference loops against the OpenMP kernels on the same inputs.

#include <map>

#include <benchmark/benchmark.h>

#include "bicrossed/deformation.hpp"
#include "bicrossed/kernels.hpp"
#include "bicrossed/matched_pair.hpp"
#include "bicrossed/quantum_examples.hpp"

using namespace bicrossed;

namespace {

FamilyParams params(unsigned n) {
  FamilyParams f;
  f.n = n;
  f.t = static_cast<int>(n) - 1;
  f.l = 1;
  f.p = 1;
  f.field = Field::cyclotomic(n);
  return f;
}

const HopfStructure& h4n_algebra(unsigned n) {
  static std::map<unsigned, HopfStructure> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, h4n(params(n)).hopf).first;
  return it->second;
}

Exec exec_of(const benchmark::State& state) {
  return state.range(1) ? Exec::parallel : Exec::serial;
}

void BM_Associativity(benchmark::State& state) {
  const HopfStructure& h = h4n_algebra(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_associativity(h, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_Bialgebra(benchmark::State& state) {
  const HopfStructure& h = h4n_algebra(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_bialgebra(h, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_HopfAxioms(benchmark::State& state) {
  const HopfStructure& h = h4n_algebra(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(h, Level::hopf, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_MatchedPair(benchmark::State& state) {
  MatchedPairHopf mp = cn_h4n_matched_pair(params(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_matched_pair(mp, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_DeformationMap(benchmark::State& state) {
  FamilyParams p = params(static_cast<unsigned>(state.range(0)));
  MatchedPairHopf mp = cn_h4n_matched_pair(p);
  LinearMap r = rp_map(p);
  for (auto _ : state) benchmark::DoNotOptimize(is_deformation_map(mp, r, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_Enumerate(benchmark::State& state) {
  FamilyParams p = params(static_cast<unsigned>(state.range(0)));
  MatchedPairHopf mp = cn_h4n_matched_pair(p);
  PointedCertificate cH = h4n(p).cert, cA = cn_certificate(p.n);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_deformation_maps(mp, cH, cA, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long n : {3, 6})
    for (long par : {0, 1}) b->Args({n, par});
}

}  // namespace

BENCHMARK(BM_Associativity)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bialgebra)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HopfAxioms)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchedPair)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeformationMap)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Apply(sizes)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
