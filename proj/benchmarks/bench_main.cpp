#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "skewinc/algebra.hpp"
#include "skewinc/isomorphism.hpp"
#include "skewinc/poset.hpp"
#include "skewinc/ring.hpp"
#include "skewinc/structure.hpp"

using namespace skewinc;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel).poset;
}

ContextPtr context(int n, const char* spec) {
  return AlgebraContext::create(chain(n), parse_ring_spec(spec));
}

// All-ones element: a unit with full support, the worst case for the
// interval recursions.
SkewElement dense_unit(const ContextPtr& ctx) {
  const RingElem one = ctx->ring()->one();
  std::vector<std::pair<int, RingElem>> coeffs;
  for (int p = 0; p < static_cast<int>(ctx->pairs().size()); ++p)
    coeffs.emplace_back(p, one);
  return SkewElement(ctx, std::move(coeffs));
}

void BM_Multiply(benchmark::State& state, const char* spec) {
  const ContextPtr ctx = context(static_cast<int>(state.range(0)), spec);
  const SkewElement f = dense_unit(ctx);
  const SkewElement g = dense_unit(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(ctx->multiply(f, g));
}

void BM_Invert(benchmark::State& state, const char* spec) {
  const ContextPtr ctx = context(static_cast<int>(state.range(0)), spec);
  const SkewElement f = dense_unit(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(invert_elem(f));
}

void BM_Fingerprint(benchmark::State& state, const char* spec) {
  const ContextPtr ctx = context(static_cast<int>(state.range(0)), spec);
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(ctx));
}

void BM_CenterEnumerate(benchmark::State& state, const char* spec) {
  const ContextPtr ctx = context(static_cast<int>(state.range(0)), spec);
  for (auto _ : state) benchmark::DoNotOptimize(center_enumerate(ctx));
}

BENCHMARK_CAPTURE(BM_Multiply, zmod8, "zmod:8")->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_Multiply, gf4, "gf:2:2:frobenius")->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_Invert, zmod8, "zmod:8")->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_Invert, gf4, "gf:2:2:frobenius")->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_Fingerprint, zmod2, "zmod:2")->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_Fingerprint, zmod4, "zmod:4")->Arg(2);
BENCHMARK_CAPTURE(BM_CenterEnumerate, zmod3, "zmod:3")->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_CenterEnumerate, gf4, "gf:2:2:frobenius")->Arg(3);

}  // namespace

BENCHMARK_MAIN();
