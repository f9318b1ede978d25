#include <benchmark/benchmark.h>

#include <random>

#include "udyn/limit.hpp"
#include "udyn/map.hpp"
#include "udyn/oracle.hpp"
#include "udyn/valuation.hpp"

using namespace udyn;

namespace {

MapParams lt_params() { return validate_params(3, BigRational(9), BigRational(3), BigRational(1)); }

}  // namespace

static void BM_VpRat(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(1, 1L << 40);
  std::vector<BigRational> xs;
  for (int i = 0; i < 1024; ++i) xs.emplace_back(BigInt(d(rng)) * 243, BigInt(d(rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vp_rat(xs[i++ & 1023], 3));
  }
}
BENCHMARK(BM_VpRat);

static void BM_EvalF(benchmark::State& state) {
  const MapParams mp = lt_params();
  const Point x(BigRational::parse("1234/577"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f(x, mp));
  }
}
BENCHMARK(BM_EvalF);

static void BM_EvalFQuad(benchmark::State& state) {
  const MapParams mp = validate_params(2, BigRational(8), BigRational(2), BigRational(1));
  const Point x(QuadExt(BigRational(3), BigRational::parse("5/7"), BigRational(8)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f(x, mp));
  }
}
BENCHMARK(BM_EvalFQuad);

// Exact growth dominates: heights roughly triple per step until the bit budget.
static void BM_Orbit(benchmark::State& state) {
  const MapParams mp = lt_params();
  const Point x(BigRational::parse("1234/577"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(x, mp, state.range(0)));
  }
}
BENCHMARK(BM_Orbit)->Arg(5)->Arg(10)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_RadiusOrbit(benchmark::State& state) {
  CriticalValues cv;
  cv.b_prime = Radius::from_valuation(HalfInt::from_int(3));
  cv.c_prime = Radius::from_valuation(HalfInt::from_int(-1));
  const RadiusMapSpec spec = RadiusMapSpec::make(3, HalfInt::from_int(2), HalfInt::from_int(0), HalfInt::from_int(2), cv);
  const Radius r = Radius::from_valuation(HalfInt::from_int(-8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(radius_orbit(r, spec, state.range(0)));
  }
}
BENCHMARK(BM_RadiusOrbit)->Arg(16)->Arg(256);

static void BM_LimitClassify(benchmark::State& state) {
  const RadiusMapSpec spec = lt_params().radius_spec();
  const Radius r = Radius::from_valuation(HalfInt::from_int(-40));
  for (auto _ : state) {
    benchmark::DoNotOptimize(limit_classify(r, spec));
  }
}
BENCHMARK(BM_LimitClassify);

static void BM_CheckLemma1(benchmark::State& state) {
  const MapParams mp = lt_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lemma1(mp, 5, 10, 0));
  }
}
BENCHMARK(BM_CheckLemma1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
