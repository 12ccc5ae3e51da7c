#include <benchmark/benchmark.h>

#include "grwscmf/dataset.hpp"
#include "grwscmf/eval.hpp"
#include "grwscmf/factorization.hpp"
#include "grwscmf/graph.hpp"
#include "grwscmf/rng.hpp"
#include "grwscmf/walk.hpp"

#include <numeric>
#include <vector>

using namespace grwscmf;

namespace {

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols,
                     std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.next_double();
    return m;
}

Matrix random_binary(Eigen::Index rows, Eigen::Index cols,
                     std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = rng.next_double() < 0.4 ? 1.0 : 0.0;
    return m;
}

}  // namespace

static void BM_EstimateMI(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    const Matrix x = random_matrix(n, 100, 1);
    const Matrix y = random_binary(n, 10, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_mi(x, y, 5));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EstimateMI)->Arg(200)->Arg(500)->Arg(1000)->Complexity();

static void BM_BuildGraph(benchmark::State& state) {
    const auto d = static_cast<Eigen::Index>(state.range(0));
    const Matrix x = random_matrix(300, d, 3);
    const Matrix y = random_binary(300, 12, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_graph(x, y, 5));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(50)->Arg(100)->Arg(200)->Complexity();

static void BM_RunRwmi(benchmark::State& state) {
    const Matrix x = random_matrix(300, 100, 5);
    const Matrix y = random_binary(300, 10, 6);
    const RelevanceGraph g = build_graph(x, y, 5);
    WalkConfig cfg;
    cfg.n_walks = state.range(0);
    cfg.walk_length = 20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_rwmi(g, cfg));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunRwmi)->Arg(100)->Arg(1000)->Arg(10000)->Complexity();

static void BM_FitIterations(benchmark::State& state) {
    const Matrix x = random_matrix(400, 100, 7);
    const Matrix y = random_binary(400, 10, 8);
    const Matrix r_w = random_matrix(100, 10, 9);
    Hyperparams hp;
    hp.k = 8;
    hp.max_iter = static_cast<int>(state.range(0));
    hp.tol = 1e-300;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(x, y, r_w, hp, 42));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FitIterations)->Arg(10)->Arg(50)->Arg(100)->Complexity();

static void BM_KnnPredict(benchmark::State& state) {
    const auto n_tr = static_cast<Eigen::Index>(state.range(0));
    const Matrix x_train = random_matrix(n_tr, 100, 10);
    const Matrix y_train = random_binary(n_tr, 10, 11);
    const Matrix x_test = random_matrix(200, 100, 12);
    std::vector<int> selected(20);
    std::iota(selected.begin(), selected.end(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            knn_predict(x_train, y_train, x_test, 3, selected));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KnnPredict)->Arg(250)->Arg(500)->Arg(1000)->Complexity();

static void BM_MlknnPredict(benchmark::State& state) {
    const auto n_tr = static_cast<Eigen::Index>(state.range(0));
    const Matrix x_train = random_matrix(n_tr, 100, 13);
    const Matrix y_train = random_binary(n_tr, 10, 14);
    const Matrix x_test = random_matrix(200, 100, 15);
    std::vector<int> selected(20);
    std::iota(selected.begin(), selected.end(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mlknn_predict(x_train, y_train, x_test, 10, 1.0, selected));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MlknnPredict)->Arg(250)->Arg(500)->Arg(1000)->Complexity();

BENCHMARK_MAIN();
