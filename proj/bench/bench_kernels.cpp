// Serial reference vs OpenMP kernels on growing inputs. The Arg is the
// Newton polygon size (total degree of the dense polynomial).

#include <benchmark/benchmark.h>

#include <string>

#include "amoeba/classify.hpp"
#include "amoeba/tropical.hpp"

using namespace amoeba;

namespace {

// Dense bivariate polynomial of total degree d with 2-adically varied
// coefficients, so the subdivision at p = 2 is far from trivial.
LaurentPoly dense(long d, std::size_t rank = 2) {
    std::string text;
    for (long i = 0; i <= d; ++i)
        for (long j = 0; i + j <= d; ++j) {
            const long k = (3 * i * i + 5 * j * j + 7 * i * j) % 6;
            text += " + " + std::to_string(1L << k) + "*x1^" + std::to_string(i) + "*x2^" + std::to_string(j);
            if (rank == 3)
                text += "*x3^" + std::to_string((i + 2 * j) % 3);
        }
    return parse_laurent(text, rank, Field::Q);
}

Execution mode(const benchmark::State &state) {
    return state.range(1) ? Execution::Parallel : Execution::Serial;
}

void args(benchmark::internal::Benchmark *b) {
    b->ArgNames({"degree", "parallel"});
    for (long d : {3, 5, 7})
        for (long parallel : {0, 1})
            b->Args({d, parallel});
    b->Unit(benchmark::kMillisecond);
}

void BM_Trop(benchmark::State &state) {
    const auto f = dense(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(trop_hypersurface(f, Place::prime(2), mode(state)));
    state.counters["terms"] = static_cast<double>(f.size());
}
BENCHMARK(BM_Trop)->Apply(args);

void BM_Prevariety(benchmark::State &state) {
    const long d = state.range(0);
    const std::vector<PullbackConstraint> system = {
        {dense(d), {{1, 0, 0}, {0, 1, 0}}}, {dense(d), {{1, 0, 0}, {0, 0, 1}}}, {dense(d), {{0, 1, 0}, {0, 0, 1}}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(prevariety(system, Place::prime(2), mode(state)));
}
BENCHMARK(BM_Prevariety)->Apply(args);

void BM_HalfspaceMeets(benchmark::State &state) {
    const auto complex = trop_hypersurface(dense(state.range(0), 3), Place::prime(2));
    // A direction no cell reaches keeps every LP in play.
    const auto h = make_halfspace({}, IntVector{-1, -1, -1});
    for (auto _ : state)
        benchmark::DoNotOptimize(halfspace_meets_complex(h, complex, mode(state)));
    state.counters["cells"] = static_cast<double>(complex.cells.size());
}
BENCHMARK(BM_HalfspaceMeets)->Apply(args);

} // namespace
BENCHMARK_MAIN();
