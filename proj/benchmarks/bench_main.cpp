#include <benchmark/benchmark.h>

#include "k3fib/enumerate.hpp"
#include "k3fib/ffpoly.hpp"
#include "k3fib/fixtures.hpp"
#include "k3fib/tate.hpp"

namespace {

using namespace k3fib;

const example_fixture& first_fixture() {
  return builtin_fixtures().models.front();
}

void BM_factor_artin_schreier(benchmark::State& state) {
  // t^p - t - 1, irreducible of degree p
  long long p = state.range(0);
  prime_field k(p);
  poly t = poly::variable(k);
  poly f = pow(t, static_cast<int>(p)) - t - poly::constant(k, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(f));
  }
}
BENCHMARK(BM_factor_artin_schreier)->Arg(5)->Arg(11)->Arg(23);

void BM_factor_split(benchmark::State& state) {
  // t^p - t, splits into p linear factors
  long long p = state.range(0);
  prime_field k(p);
  poly t = poly::variable(k);
  poly f = pow(t, static_cast<int>(p)) - t;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(f));
  }
}
BENCHMARK(BM_factor_split)->Arg(11)->Arg(23);

void BM_classify_fibration(benchmark::State& state) {
  const auto& m = first_fixture().model;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_fibration(m));
  }
}
BENCHMARK(BM_classify_fibration);

void BM_verify_all_examples(benchmark::State& state) {
  const auto& fx = builtin_fixtures();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_examples(fx));
  }
}
BENCHMARK(BM_verify_all_examples);

void BM_enumerate_configs(benchmark::State& state) {
  long long p = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_wild_configs(p));
  }
}
BENCHMARK(BM_enumerate_configs)->Arg(5)->Arg(7)->Arg(11);

void BM_contribution_maxima(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_contribution_sum(19));
    benchmark::DoNotOptimize(max_contribution_sum_p3());
  }
}
BENCHMARK(BM_contribution_maxima);

}  // namespace

BENCHMARK_MAIN();
