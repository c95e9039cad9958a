#include <benchmark/benchmark.h>

#include "rlab/cnf.hpp"
#include "rlab/dimensions.hpp"
#include "rlab/harness.hpp"
#include "rlab/hypercube.hpp"
#include "rlab/learners.hpp"
#include "rlab/robustrisk.hpp"

using namespace rlab;

static void BM_BallEnumeration(benchmark::State& st) {
    const int n = 64, rho = static_cast<int>(st.range(0));
    BitVector x(n);
    for (auto _ : st) {
        std::uint64_t k = 0;
        for (const auto& z : ball(x, rho)) k += z.get(1);
        benchmark::DoNotOptimize(k);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(ball_size(n, rho)));
}
BENCHMARK(BM_BallEnumeration)->DenseRange(1, 3);

static void BM_BallAnyMask(benchmark::State& st) {
    const int n = 20, rho = static_cast<int>(st.range(0));
    for (auto _ : st) {
        bool hit = ball_any_mask(0, n, rho, [](std::uint64_t z) { return z == ~std::uint64_t{0}; });
        benchmark::DoNotOptimize(hit);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(ball_size(n, rho)));
}
BENCHMARK(BM_BallAnyMask)->DenseRange(1, 4);

static void BM_RobustRiskExact(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0)), rho = 2;
    auto c = Concept::majority(n, {1, 2, 3, 4, 5}), h = Concept::parity(n, {2, 7});
    auto D = Distribution::product_alpha(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(robust_risk_exact(c, h, rho, D).value);
}
BENCHMARK(BM_RobustRiskExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_VcConjunctions(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    auto f = FiniteClass::on_cube(enumerate_class({"conj"}, n), n);
    for (auto _ : st) benchmark::DoNotOptimize(vc_dimension(f).value);
}
BENCHMARK(BM_VcConjunctions)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_LittlestonePrecision(benchmark::State& st) {
    const double tau = 1.0 / static_cast<double>(st.range(0));
    auto g = threshold_grid(1.0, tau / 8);
    SearchOptions o;
    o.tau = tau;
    o.metric = g.metric();
    for (auto _ : st) benchmark::DoNotOptimize(littlestone_dimension(g.cls, o).value);
}
BENCHMARK(BM_LittlestonePrecision)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ResolutionClosure(benchmark::State& st) {
    const int k = static_cast<int>(st.range(0));
    std::vector<Clause> cs;
    for (int i = 1; i <= k; ++i) cs.push_back({i, k + 1});
    for (int i = k + 2; i <= 2 * k + 1; ++i) cs.push_back({-(k + 1), i});
    CnfFormula f(2 * k + 1, cs);
    for (auto _ : st) benchmark::DoNotOptimize(resolution_closure(f).size());
}
BENCHMARK(BM_ResolutionClosure)->Arg(4)->Arg(8)->Arg(16);

static void BM_Scenario(benchmark::State& st, const char* config) {
    auto c = parse_config(nlohmann::json::parse(config));
    for (auto _ : st) benchmark::DoNotOptimize(run_scenario(c).pass);
}
BENCHMARK_CAPTURE(BM_Scenario, monconj_lower_bound,
                  R"({"version":1,"scenario":"monconj-lower-bound","n":16,"rho":4,"trials":200})")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, leq_conjunction_queries,
                  R"({"version":1,"scenario":"leq-conjunction-queries","n":16,"trials":50})")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, leq_winnow_ltf, R"({"version":1,"scenario":"leq-winnow-ltf","n":32,"W":4,"trials":10})")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
