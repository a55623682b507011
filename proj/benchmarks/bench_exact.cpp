#include <benchmark/benchmark.h>

#include "horolat/elementary.hpp"
#include "horolat/matrix.hpp"
#include "horolat/verify.hpp"

using namespace horolat;

namespace {

std::vector<GMatrix> pool(int n, int count) {
    Rng rng(2024);
    std::vector<GMatrix> out;
    for (int i = 0; i < count; ++i) out.push_back(random_sln(rng, n, 5, 10, 10));
    return out;
}

void BM_gmatrix_mul3(benchmark::State& state) {
    auto ms = pool(3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ms[i % 64] * ms[(i + 1) % 64]);
        ++i;
    }
}
BENCHMARK(BM_gmatrix_mul3);

void BM_gmatrix_inverse3(benchmark::State& state) {
    auto ms = pool(3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ms[i++ % 64].inverse());
    }
}
BENCHMARK(BM_gmatrix_inverse3);

void BM_sigma2(benchmark::State& state) {
    auto ms = pool(3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma2(ms[i++ % 64]));
    }
}
BENCHMARK(BM_sigma2);

void BM_elementary_decomposition(benchmark::State& state) {
    auto ms = pool(3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elementary_decomposition(ms[i++ % 64]));
    }
}
BENCHMARK(BM_elementary_decomposition);

void BM_matrix_key(benchmark::State& state) {
    auto ms = pool(3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ms[i++ % 64].key());
    }
}
BENCHMARK(BM_matrix_key);

}  // namespace
