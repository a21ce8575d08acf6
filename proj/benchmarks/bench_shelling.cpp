#include <benchmark/benchmark.h>

#include "dissect/decomposition.hpp"
#include "dissect/dissection_complex.hpp"
#include "dissect/homology.hpp"
#include "dissect/shelling.hpp"

namespace {

dissect::ComplexParams params_of(const benchmark::State& state) {
  return {state.range(0) == 0 ? dissect::Family::A : dissect::Family::B, static_cast<int>(state.range(1)),
          static_cast<int>(state.range(2))};
}

void BM_VertexDecomposition(benchmark::State& state) {
  const dissect::DissectionComplex complex(params_of(state));
  const auto abs = complex.to_abstract();
  dissect::DecompositionSearchOptions options;
  for (std::size_t i : complex.shedding_priority()) options.priority.push_back(static_cast<dissect::Vertex>(i));
  for (auto _ : state) {
    auto r = dissect::find_vertex_decomposition(abs, options);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VertexDecomposition)->Args({0, 3, 5})->Args({1, 2, 4})->Args({1, 3, 4})->Unit(benchmark::kMillisecond);

void BM_ShellingVerify(benchmark::State& state) {
  const dissect::DissectionComplex complex(params_of(state));
  const auto abs = complex.to_abstract();
  const auto r = dissect::find_vertex_decomposition(abs);
  const auto order = dissect::shelling_from_decomposition(abs, *r.certificate);
  for (auto _ : state) {
    auto check = dissect::verify_shelling(abs, order.facets);
    benchmark::DoNotOptimize(check);
  }
}
BENCHMARK(BM_ShellingVerify)->Args({0, 3, 5})->Args({1, 2, 4})->Unit(benchmark::kMillisecond);

void BM_ReducedHomology(benchmark::State& state) {
  const auto abs = dissect::DissectionComplex(params_of(state)).to_abstract();
  for (auto _ : state) {
    auto h = dissect::reduced_homology(abs);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_ReducedHomology)->Args({0, 2, 5})->Args({1, 2, 3})->Args({1, 2, 4})->Unit(benchmark::kMillisecond);

}  // namespace
