#include <benchmark/benchmark.h>

#include "horolat/discreteness.hpp"
#include "horolat/verify.hpp"

using namespace horolat;

namespace {

void BM_bfs_enumerate(benchmark::State& state) {
    HoroLattice f1 = HoroLattice::gaussian_integers({HoroTag::U});
    HoroLattice f2 = HoroLattice::gaussian_integers({HoroTag::Uminus});
    EngineConfig cfg;
    cfg.max_word_len = static_cast<int>(state.range(0));
    cfg.cascade_max = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bfs_enumerate(f1, f2, cfg).size());
    }
}
BENCHMARK(BM_bfs_enumerate)->Arg(2)->Arg(3);

void BM_contraction_check(benchmark::State& state) {
    Rng rng(5);
    std::vector<GMatrix> balls;
    for (int i = 0; i < 32; ++i) balls.push_back(random_ball_element(rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(contraction_check(balls[i % 32], balls[(i + 7) % 32]).ok);
        ++i;
    }
}
BENCHMARK(BM_contraction_check);

void BM_cascade_depth4(benchmark::State& state) {
    GaussianRational rho(make_rational(1, 10));
    HoroLattice f1 = HoroLattice::gaussian_integers({HoroTag::U});
    HoroLattice f2 = HoroLattice::gaussian_integers({HoroTag::Uminus}).scaled(rho);
    auto gens = generator_set(f1, f2);
    auto gen = [&](std::int16_t l) { return GroupElement{gens[l - 1], Word{l}}; };
    auto comm = [](const GroupElement& a, const GroupElement& b) {
        Word w = a.word;
        w.insert(w.end(), b.word.begin(), b.word.end());
        Word iw = inverse_word(a.word);
        w.insert(w.end(), iw.begin(), iw.end());
        iw = inverse_word(b.word);
        w.insert(w.end(), iw.begin(), iw.end());
        return GroupElement{commutator(a.matrix, b.matrix), w};
    };
    GroupElement s1 = comm(comm(gen(1), gen(7)), comm(gen(3), gen(5)));
    GroupElement s2 = comm(comm(gen(2), gen(7)), comm(gen(3), gen(5)));
    EngineConfig cfg;
    cfg.cascade_max = 4;
    cfg.height_cap = 100000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutator_cascade({s1, s2}, cfg).kind);
    }
}
BENCHMARK(BM_cascade_depth4);

}  // namespace
