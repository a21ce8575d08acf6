#include <benchmark/benchmark.h>

#include "dissect/bijection.hpp"
#include "dissect/dissection_complex.hpp"

namespace {

// encode then decode every facet
void BM_RoundTripFacets(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto facets = dissect::DissectionComplex(dissect::ComplexParams(dissect::Family::B, m, n)).facets();
  for (auto _ : state) {
    for (const auto& f : facets) {
      auto back = dissect::decode(dissect::encode(f), m, n);
      benchmark::DoNotOptimize(back);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(facets.size()));
}
BENCHMARK(BM_RoundTripFacets)->Args({1, 4})->Args({2, 4})->Args({3, 4})->Args({2, 5});

void BM_DecodeLargeImage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  dissect::BijectionImage img;
  for (int i = 0; i < n; ++i) img.labels.push_back(1 + i * 2);
  img.flags.assign(static_cast<std::size_t>(n), 1);
  for (auto _ : state) {
    auto f = dissect::decode(img, 2, n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_DecodeLargeImage)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
