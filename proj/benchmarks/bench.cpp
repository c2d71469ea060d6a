#include "thetadirac/dirac.hpp"
#include "thetadirac/theta.hpp"
#include "thetadirac/unipotent.hpp"
#include "thetadirac/weyl.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace thetadirac;

namespace {

GroupKind kind_for(const benchmark::State& state) {
    return GroupKind(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1)));
}

std::vector<WeightPair> random_pairs(const GroupKind& k, int count) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    std::vector<WeightPair> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Rat> a, b;
        for (int j = 0; j < k.rank(); ++j) {
            a.emplace_back(coord(rng), 2);
            b.emplace_back(coord(rng), 2);
        }
        out.push_back({Weight(a), Weight(b)});
    }
    return out;
}

void BM_PairCanonicalForm(benchmark::State& state) {
    const GroupKind k = kind_for(state);
    const auto pairs = random_pairs(k, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& p = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(pair_equivalent(k, p, {p.second, p.first}));
    }
}

void BM_PairExhaustive(benchmark::State& state) {
    const GroupKind k = kind_for(state);
    const auto pairs = random_pairs(k, 64);
    const auto group = enumerate(k);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& p = pairs[i++ % pairs.size()];
        bool hit = false;
        for (const auto& g : group) {
            if (apply(k, g, p.first) == p.second && apply(k, g, p.second) == p.first) {
                hit = true;
                break;
            }
        }
        benchmark::DoNotOptimize(hit);
    }
}

void BM_DecomposeUnipotent(benchmark::State& state) {
    const GroupKind k = kind_for(state);
    const ZhelParam p = unipotent_param(enumerate_family(k).front());
    for (auto _ : state) benchmark::DoNotOptimize(decompose(k, p));
}

void BM_DecomposeInduced(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const GroupKind k = GroupKind::sp(r);
    std::vector<GLBlock> blocks;
    for (int i = 0; i + 1 < r; ++i) blocks.push_back(make_gl_block(1, 0, Rat(2 * i + r + 1)));
    const ZhelParam p = assemble(LeviDecomposition{blocks, UnipotentDescriptor::type_c(1, Parity::Even), k});
    for (auto _ : state) benchmark::DoNotOptimize(decompose(k, p));
}

void BM_LiftTypeII(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ZhelParam p = unipotent_param(enumerate_family(GroupKind::gl(m)).front());
    const DualPair pair = DualPair::type_ii(m, m + 3);
    for (auto _ : state) benchmark::DoNotOptimize(lift(pair, p));
}

void BM_LiftOrthogonalToSymplectic(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ZhelParam p = unipotent_param(enumerate_family(GroupKind(Family::D, m)).front());
    const DualPair pair = DualPair::orthogonal_to_symplectic(m, 0, m + 2);
    for (auto _ : state) benchmark::DoNotOptimize(lift(pair, p));
}

void BM_LiftSymplecticToOrthogonal(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ZhelParam p = unipotent_param(UnipotentDescriptor::type_c(m, Parity::Even));
    const DualPair pair = DualPair::symplectic_to_orthogonal(m, m + 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(lift(pair, p));
}

void families_and_ranks(benchmark::internal::Benchmark* b) {
    for (int f = 0; f < 4; ++f) {
        for (int r : {2, 4, 6}) b->Args({f, r});
    }
}

}  // namespace

BENCHMARK(BM_PairCanonicalForm)->Apply(families_and_ranks);
BENCHMARK(BM_PairExhaustive)->Apply(families_and_ranks);
BENCHMARK(BM_DecomposeUnipotent)->Args({3, 4})->Args({3, 8})->Args({2, 8})->Args({0, 9});
BENCHMARK(BM_DecomposeInduced)->DenseRange(2, 8, 2);
BENCHMARK(BM_LiftTypeII)->DenseRange(1, 6);
BENCHMARK(BM_LiftOrthogonalToSymplectic)->DenseRange(2, 6, 2);
BENCHMARK(BM_LiftSymplecticToOrthogonal)->DenseRange(2, 6, 2);
BENCHMARK_MAIN();
