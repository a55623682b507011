#include <benchmark/benchmark.h>

#include "horolat/lattice_geometry.hpp"
#include "horolat/verify.hpp"

using namespace horolat;

namespace {

std::vector<ZLattice4> lattice_pool(int count) {
    Rng rng(77);
    std::vector<ZLattice4> out;
    for (int i = 0; i < count; ++i) out.push_back(random_integer_lattice(rng));
    return out;
}

void BM_lll_reduce(benchmark::State& state) {
    auto ls = lattice_pool(32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_basis(ls[i++ % 32]));
    }
}
BENCHMARK(BM_lll_reduce);

void BM_shortest_vector(benchmark::State& state) {
    auto ls = lattice_pool(32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(shortest_vector(ls[i++ % 32]));
    }
}
BENCHMARK(BM_shortest_vector);

void BM_lattice_canonical(benchmark::State& state) {
    auto ls = lattice_pool(32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ls[i++ % 32].canonical());
    }
}
BENCHMARK(BM_lattice_canonical);

}  // namespace
