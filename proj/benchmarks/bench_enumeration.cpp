#include <benchmark/benchmark.h>

#include "dissect/dissection_complex.hpp"

namespace {

void BM_EnumerateTypeA(benchmark::State& state) {
  const dissect::DissectionComplex complex(dissect::ComplexParams(dissect::Family::A, 2, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto t = complex.enumerate_index_faces();
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_EnumerateTypeA)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_EnumerateTypeB(benchmark::State& state) {
  const dissect::DissectionComplex complex(dissect::ComplexParams(dissect::Family::B, 2, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto t = complex.enumerate_index_faces();
    benchmark::DoNotOptimize(t);
  }
  state.counters["faces"] = static_cast<double>(dissect::projected_face_count(complex.params(), complex.params().rank()));
}
BENCHMARK(BM_EnumerateTypeB)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BuildComplex(benchmark::State& state) {
  for (auto _ : state) {
    dissect::DissectionComplex complex(dissect::ComplexParams(dissect::Family::B, 3, static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(complex);
  }
}
BENCHMARK(BM_BuildComplex)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
