#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rlab {

inline constexpr int kConfigVersion = 1;
inline constexpr int kReportVersion = 1;
// Absolute slack on Monte-Carlo lower bounds.
inline constexpr double kTolerance = 0.02;

struct ScenarioConfig {
    std::string scenario;
    std::optional<int> n;
    // Integer radius on the cube; l2 budget for precision-perceptron.
    std::optional<double> rho;
    std::optional<int> lambda;
    std::optional<double> alpha, epsilon, delta, kappa, B, tau;
    std::optional<long long> W;
    std::optional<std::uint64_t> m, queries;
    std::uint64_t trials = 1;
    std::uint64_t base_seed = 0;
    std::optional<std::string> output;
};

// Validates against the versioned schema; throws InvalidInput naming the offending key.
ScenarioConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const ScenarioConfig& c);
// A file holds one config object or {"version": 1, "runs": [...]}.
std::vector<ScenarioConfig> load_configs(const std::string& path);

struct ScenarioInfo {
    std::string id;
    std::string description;
    std::string anchor;
    std::vector<std::string> fields;
};
const std::vector<ScenarioInfo>& list_scenarios();
const ScenarioInfo& scenario_info(const std::string& id);

struct ScenarioReport {
    nlohmann::json config;
    std::string anchor;
    std::string predicate;
    std::string scope;
    std::vector<std::string> columns;
    // One row per trial; cells are numbers or short strings.
    std::vector<std::vector<nlohmann::json>> rows;
    nlohmann::json aggregates = nlohmann::json::object();
    bool pass = false;
    double wall_seconds = 0;
};

ScenarioReport run_scenario(const ScenarioConfig& c);

// Byte-stable renderings; wall-clock time is deliberately left out.
std::string report_json(const ScenarioReport& r);
std::string report_csv(const ScenarioReport& r);
ScenarioReport parse_report(const std::string& json_text);
void write_report(const ScenarioReport& r, const std::string& prefix);

// RLAB_WORKERS overrides the hardware concurrency.
unsigned worker_count();
// Runs body(t) for t in [0, trials) on the worker pool; results land at index t.
void parallel_trials(std::uint64_t trials, const std::function<void(std::uint64_t)>& body);

}  // namespace rlab
