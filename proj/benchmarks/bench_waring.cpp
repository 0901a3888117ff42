#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "waring/waring.hpp"

namespace {

using waring::BinaryForm;
using waring::Rational;
using waring::RatMatrix;

// Deterministic pseudo-random form with raw coefficients in [-100, 100].
BinaryForm sample_form(std::size_t degree, unsigned seed) {
  std::vector<Rational> raw(degree + 1);
  unsigned state = seed * 2654435761u + 17;
  for (auto& r : raw) {
    state = state * 1664525u + 1013904223u;
    r = Rational(static_cast<long>(state % 201) - 100);
  }
  raw[degree] = Rational(1);
  return waring::from_raw_coeffs(raw);
}

RatMatrix sample_matrix(std::size_t n, unsigned seed) {
  RatMatrix m(n, n);
  unsigned state = seed * 69069u + 5;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      state = state * 1664525u + 1013904223u;
      long num = static_cast<long>(state % 41) - 20;
      state = state * 1664525u + 1013904223u;
      long den = 1 + static_cast<long>(state % 9);
      m(i, j) = Rational(num, den);
    }
  }
  return m;
}

void BM_det_bareiss(benchmark::State& state) {
  RatMatrix m = sample_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(waring::det_bareiss(m));
}
BENCHMARK(BM_det_bareiss)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_restrict_deltas(benchmark::State& state) {
  BinaryForm p = sample_form(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(waring::restrict_deltas(p));
}
BENCHMARK(BM_restrict_deltas)->Arg(5)->Arg(7)->Arg(9);

void BM_decompose(benchmark::State& state) {
  BinaryForm p = sample_form(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(waring::decompose(p));
}
BENCHMARK(BM_decompose)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void BM_parse_poly(benchmark::State& state) {
  const std::string text = "x^5 + 30*x^4*y + 340*x^3*y^2 + 1860*x^2*y^3 + 4970*x*y^4 + 5226*y^5";
  for (auto _ : state) benchmark::DoNotOptimize(waring::parse_poly(text));
}
BENCHMARK(BM_parse_poly);

}  // namespace

BENCHMARK_MAIN();
