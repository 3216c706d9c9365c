#include <benchmark/benchmark.h>

#include "support.hpp"
#include "sympow/datasets.hpp"
#include "sympow/ideal.hpp"
#include "sympow/kernels.hpp"

using namespace sympow;

namespace {

ExactMatrix sample(const FieldPtr& f, std::size_t n)
{
    testkit::Gen g(1234 + n);
    return g.matrix(f, n, n + n / 2);
}

FieldPtr field_for(int which) { return which == 0 ? rational_field() : cyclotomic_field(12); }

void BM_rref_kernels(benchmark::State& st)
{
    const ExactMatrix m = sample(field_for(static_cast<int>(st.range(1))), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_serial(benchmark::State& st)
{
    const ExactMatrix m = sample(field_for(static_cast<int>(st.range(1))), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(reference::rref_serial(m));
}

void BM_rref_q_fraction_free(benchmark::State& st)
{
    const ExactMatrix m = sample(rational_field(), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rref(m, Elimination::fraction_free));
}

void BM_rref_q_gauss(benchmark::State& st)
{
    const ExactMatrix m = sample(rational_field(), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rref(m, Elimination::gauss));
}

void BM_fat_piece_twelve(benchmark::State& st)
{
    const Dataset ds = fp_even_dataset(12, FieldMode::compact);
    const FatPointScheme z = make_scheme(ds.field, ds.points, 3);
    for (auto _ : st) benchmark::DoNotOptimize(fat_piece(z, static_cast<unsigned>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_rref_kernels)->ArgsProduct({{16, 32, 48}, {0}})->ArgsProduct({{8, 16, 24}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->ArgsProduct({{16, 32, 48}, {0}})->ArgsProduct({{8, 16, 24}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_q_fraction_free)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_q_gauss)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fat_piece_twelve)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
