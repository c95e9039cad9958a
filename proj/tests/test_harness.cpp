#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rlab/error.hpp"
#include "rlab/harness.hpp"

using namespace rlab;
using json = nlohmann::json;

namespace {

ScenarioConfig cfg(json j) {
    j["version"] = 1;
    return parse_config(j);
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Registry, ListsEveryScenario) {
    std::vector<std::string> ids;
    for (const auto& s : list_scenarios()) {
        ids.push_back(s.id);
        EXPECT_FALSE(s.anchor.empty());
        EXPECT_FALSE(s.description.empty());
    }
    for (const char* id : {"monconj-lower-bound", "lmq-lower-bound", "monconj-threshold", "dictator-impossibility",
                           "nontrivial-impossibility", "leq-lambda-lt-rho", "leq-conjunction-queries",
                           "leq-winnow-ltf", "leq-soa", "parity-exact", "majority-fourier", "precision-perceptron",
                           "leq-adversarial-tree", "leq-vs-eq", "eq-vs-leq", "dimension-table"})
        EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(Config, RejectsMalformed) {
    EXPECT_THROW(parse_config(json{{"scenario", "leq-vs-eq"}}), InvalidInput);
    EXPECT_THROW(parse_config(json{{"version", 2}, {"scenario", "leq-vs-eq"}}), InvalidInput);
    EXPECT_THROW(cfg({{"scenario", "nope"}}), InvalidInput);
    EXPECT_THROW(cfg({}), InvalidInput);
    EXPECT_THROW(cfg({{"scenario", "leq-vs-eq"}, {"rho", 2}}), InvalidInput);
    EXPECT_THROW(cfg({{"scenario", "leq-vs-eq"}, {"n", "ten"}}), InvalidInput);
    EXPECT_THROW(cfg({{"scenario", "leq-vs-eq"}, {"trials", 0}}), InvalidInput);
    EXPECT_THROW(cfg({{"scenario", "dimension-table"}, {"trials", 3}}), InvalidInput);
    EXPECT_THROW(run_scenario(cfg({{"scenario", "leq-vs-eq"}, {"n", 99}})), InvalidInput);
    EXPECT_THROW(run_scenario(cfg({{"scenario", "parity-exact"}, {"epsilon", 0.5}})), InvalidInput);
    EXPECT_THROW(run_scenario(cfg({{"scenario", "leq-lambda-lt-rho"}, {"lambda", 3}, {"rho", 3}})), InvalidInput);
}

TEST(Config, RoundTripsAndBatches) {
    auto c = cfg({{"scenario", "leq-soa"}, {"n", 3}, {"rho", 1}, {"trials", 4}, {"base_seed", 9}});
    auto back = parse_config(config_to_json(c));
    EXPECT_EQ(config_to_json(back), config_to_json(c));

    const std::string path = "harness_batch_test.json";
    {
        std::ofstream out(path);
        out << R"({"version":1,"runs":[{"scenario":"leq-vs-eq","n":4},{"scenario":"dimension-table","n":3}]})";
    }
    auto v = load_configs(path);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[1].scenario, "dimension-table");
    std::remove(path.c_str());
    EXPECT_THROW(load_configs("does/not/exist.json"), InvalidInput);
}

TEST(Report, ByteIdenticalReruns) {
    auto c = cfg({{"scenario", "monconj-lower-bound"}, {"n", 12}, {"rho", 2}, {"trials", 40}, {"base_seed", 3}});
    auto a = report_json(run_scenario(c)), b = report_json(run_scenario(c));
    EXPECT_EQ(a, b);
    c.base_seed = 4;
    EXPECT_NE(a, report_json(run_scenario(c)));
}

TEST(Report, JsonRoundTripAndCsvShape) {
    auto c = cfg({{"scenario", "leq-conjunction-queries"}, {"n", 6}, {"trials", 7}});
    auto r = run_scenario(c);
    auto text = report_json(r);
    auto p = parse_report(text);
    EXPECT_EQ(report_json(p), text);
    EXPECT_EQ(p.pass, r.pass);
    auto csv = report_csv(r);
    EXPECT_EQ(lines(csv), c.trials + 1);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,target_size,queries,counterexamples,robust_consistent,violation");
    // Resolved defaults are echoed.
    EXPECT_EQ(p.config.at("rho"), 2);
    EXPECT_THROW(parse_report("{}"), InvalidInput);
}

TEST(Report, WritesBothFiles) {
    auto r = run_scenario(cfg({{"scenario", "leq-vs-eq"}, {"n", 4}, {"trials", 3}}));
    write_report(r, "harness_write_test");
    std::ifstream j("harness_write_test.json"), c("harness_write_test.csv");
    std::stringstream sj, sc;
    sj << j.rdbuf();
    sc << c.rdbuf();
    EXPECT_EQ(sj.str(), report_json(r));
    EXPECT_EQ(sc.str(), report_csv(r));
    std::remove("harness_write_test.json");
    std::remove("harness_write_test.csv");
}

TEST(Workers, ExceptionsPropagate) {
    EXPECT_THROW(parallel_trials(10, [](std::uint64_t t) {
                     if (t == 5) throw InvalidInput("boom");
                 }),
                 InvalidInput);
    std::vector<int> seen(50, 0);
    parallel_trials(50, [&](std::uint64_t t) { seen[t] = 1; });
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), 50);
}

struct Smoke {
    json config;
    bool expect_pass;
};

class ScenarioSmoke : public ::testing::TestWithParam<Smoke> {};

TEST_P(ScenarioSmoke, RunsAndPasses) {
    auto c = cfg(GetParam().config);
    auto r = run_scenario(c);
    EXPECT_EQ(r.pass, GetParam().expect_pass) << report_json(r).substr(0, 1500);
    if (c.scenario != "dimension-table") EXPECT_EQ(r.rows.size(), c.trials);
    for (const auto& row : r.rows) EXPECT_EQ(row.size(), r.columns.size());
    EXPECT_FALSE(r.predicate.empty());
}

INSTANTIATE_TEST_SUITE_P(
    Small, ScenarioSmoke,
    ::testing::Values(
        Smoke{{{"scenario", "monconj-lower-bound"}, {"n", 12}, {"rho", 2}, {"trials", 300}}, true},
        Smoke{{{"scenario", "lmq-lower-bound"}, {"n", 12}, {"rho", 3}, {"trials", 300}}, true},
        Smoke{{{"scenario", "monconj-threshold"}, {"n", 8}, {"trials", 30}}, true},
        Smoke{{{"scenario", "dictator-impossibility"}, {"trials", 300}}, true},
        Smoke{{{"scenario", "nontrivial-impossibility"}, {"trials", 300}}, true},
        Smoke{{{"scenario", "leq-lambda-lt-rho"}, {"trials", 300}}, true},
        Smoke{{{"scenario", "leq-conjunction-queries"}, {"n", 8}, {"trials", 50}}, true},
        Smoke{{{"scenario", "leq-winnow-ltf"}, {"n", 16}, {"trials", 10}}, true},
        Smoke{{{"scenario", "leq-soa"}, {"n", 3}, {"trials", 20}}, true},
        Smoke{{{"scenario", "parity-exact"}, {"n", 8}, {"trials", 50}}, true},
        Smoke{{{"scenario", "majority-fourier"}, {"n", 5}, {"trials", 50}}, true},
        Smoke{{{"scenario", "precision-perceptron"}, {"trials", 50}}, true},
        Smoke{{{"scenario", "leq-adversarial-tree"}, {"n", 4}, {"trials", 100}}, true},
        Smoke{{{"scenario", "leq-vs-eq"}, {"n", 8}, {"trials", 20}}, true},
        Smoke{{{"scenario", "eq-vs-leq"}, {"trials", 20}}, true},
        Smoke{{{"scenario", "dimension-table"}, {"n", 3}}, true},
        // A too-small sample must be caught by the predicate.
        Smoke{{{"scenario", "monconj-threshold"}, {"n", 8}, {"m", 2}, {"trials", 30}}, false}));
