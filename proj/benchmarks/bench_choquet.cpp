#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "choquet/classical.hpp"
#include "choquet/quantum.hpp"

using namespace choquet;

namespace {

Vector random_unit(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vector v(d);
    for (int k = 0; k < d; ++k) v(k) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

ReferenceSet make_set(int d, int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<Vector> vecs;
        for (int i = 0; i < n; ++i) vecs.push_back(random_unit(d, rng));
        try {
            ReferenceSet set(d, std::move(vecs));
            if (set.validate().worst_singular_value > 1e-3) return set;
        } catch (const DegenerateSet&) {
        }
    }
}

quantum::ProbabilityVector make_p(const ReferenceSet& set, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    int d = set.d();
    Matrix a(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
    Matrix m = a * a.adjoint();
    m /= m.trace().real();
    return quantum::measure(set, DensityMatrix(HermitianMatrix(m)));
}

void BM_ClassicalIntegral(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> v(std::size_t{1} << n, 0.0);
    for (classical::Mask a = 1; a < v.size(); ++a) {
        double lo = 0.0;
        for (int b = 0; b < n; ++b)
            if (a & (classical::Mask{1} << b)) lo = std::max(lo, v[a ^ (classical::Mask{1} << b)]);
        v[a] = lo + uni(rng) * 0.1;
    }
    classical::Capacity mu(n, v);
    std::vector<double> f(n);
    for (double& x : f) x = uni(rng);
    classical::RankedFunction rf(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical::choquet_integral(rf, mu));
    }
}
BENCHMARK(BM_ClassicalIntegral)->Arg(4)->Arg(8)->Arg(12);

void BM_MobiusTransform(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> v(std::size_t{1} << n, 0.0);
    for (classical::Mask a = 1; a < v.size(); ++a) {
        double lo = 0.0;
        for (int b = 0; b < n; ++b)
            if (a & (classical::Mask{1} << b)) lo = std::max(lo, v[a ^ (classical::Mask{1} << b)]);
        v[a] = lo + uni(rng) * 0.1;
    }
    classical::Capacity mu(n, v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical::mobius(mu));
    }
}
BENCHMARK(BM_MobiusTransform)->Arg(8)->Arg(12)->Arg(16);

void BM_QuantumPipeline(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    auto set = make_set(d, n, 21);
    auto p = make_p(set, 22);
    for (auto _ : state) {
        auto fresh = set; // defeat the projector cache
        benchmark::DoNotOptimize(quantum::choquet(fresh, p));
    }
}
BENCHMARK(BM_QuantumPipeline)->Args({2, 3})->Args({3, 4})->Args({4, 8});

void BM_ProjectorCacheHit(benchmark::State& state) {
    auto set = make_set(3, 6, 31);
    auto p = make_p(set, 32);
    quantum::choquet(set, p); // warm the cache
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum::choquet(set, p));
    }
}
BENCHMARK(BM_ProjectorCacheHit);

} // namespace

BENCHMARK_MAIN();
