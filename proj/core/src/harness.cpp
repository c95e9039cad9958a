#include "rlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "rlab/error.hpp"

namespace rlab {

using json = nlohmann::json;

namespace {

template <class T>
std::optional<T> opt_field(const json& j, const char* k) {
    if (!j.contains(k)) return std::nullopt;
    try {
        return j.at(k).get<T>();
    } catch (const json::exception&) {
        throw InvalidInput(std::string("field '") + k + "' has the wrong type");
    }
}

template <class T>
void put(json& j, const char* k, const std::optional<T>& v) {
    if (v) j[k] = *v;
}

std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) throw InvalidInput("config must be a JSON object");
    if (!j.contains("version")) throw InvalidInput("missing field 'version'");
    if (!j.at("version").is_number_integer() || j.at("version").get<int>() != kConfigVersion)
        throw InvalidInput("unsupported config version");
    ScenarioConfig c;
    c.scenario = opt_field<std::string>(j, "scenario").value_or("");
    if (c.scenario.empty()) throw InvalidInput("missing field 'scenario'");
    const auto& info = scenario_info(c.scenario);
    for (const auto& [k, v] : j.items()) {
        if (k == "version" || k == "scenario" || k == "output") continue;
        if (std::find(info.fields.begin(), info.fields.end(), k) == info.fields.end())
            throw InvalidInput("field '" + k + "' is not accepted by scenario " + c.scenario);
    }
    c.n = opt_field<int>(j, "n");
    c.rho = opt_field<double>(j, "rho");
    c.lambda = opt_field<int>(j, "lambda");
    c.alpha = opt_field<double>(j, "alpha");
    c.epsilon = opt_field<double>(j, "epsilon");
    c.delta = opt_field<double>(j, "delta");
    c.kappa = opt_field<double>(j, "kappa");
    c.B = opt_field<double>(j, "B");
    c.tau = opt_field<double>(j, "tau");
    c.W = opt_field<long long>(j, "W");
    c.m = opt_field<std::uint64_t>(j, "m");
    c.queries = opt_field<std::uint64_t>(j, "queries");
    if (j.contains("trials")) {
        auto t = opt_field<long long>(j, "trials");
        if (*t < 1) throw InvalidInput("trials must be >= 1");
        c.trials = static_cast<std::uint64_t>(*t);
    }
    c.base_seed = opt_field<std::uint64_t>(j, "base_seed").value_or(0);
    c.output = opt_field<std::string>(j, "output");
    return c;
}

json config_to_json(const ScenarioConfig& c) {
    json j;
    j["version"] = kConfigVersion;
    j["scenario"] = c.scenario;
    put(j, "n", c.n);
    put(j, "rho", c.rho);
    put(j, "lambda", c.lambda);
    put(j, "alpha", c.alpha);
    put(j, "epsilon", c.epsilon);
    put(j, "delta", c.delta);
    put(j, "kappa", c.kappa);
    put(j, "B", c.B);
    put(j, "tau", c.tau);
    put(j, "W", c.W);
    put(j, "m", c.m);
    put(j, "queries", c.queries);
    j["trials"] = c.trials;
    j["base_seed"] = c.base_seed;
    return j;
}

std::vector<ScenarioConfig> load_configs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    std::vector<ScenarioConfig> out;
    if (j.is_object() && j.contains("runs")) {
        if (j.value("version", 0) != kConfigVersion) throw InvalidInput("unsupported config version");
        if (!j.at("runs").is_array()) throw InvalidInput("'runs' must be an array");
        for (const auto& r : j.at("runs")) {
            json rr = r;
            if (!rr.contains("version")) rr["version"] = kConfigVersion;
            out.push_back(parse_config(rr));
        }
    } else {
        out.push_back(parse_config(j));
    }
    return out;
}

std::string report_json(const ScenarioReport& r) {
    json head;
    head["report_version"] = kReportVersion;
    head["scenario"] = r.config.value("scenario", "");
    head["anchor"] = r.anchor;
    head["scope"] = r.scope;
    head["predicate"] = r.predicate;
    head["pass"] = r.pass;
    head["config"] = r.config;
    head["aggregates"] = r.aggregates;
    head["columns"] = r.columns;
    std::string s = head.dump(2);
    s.pop_back();
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    s += ",\n  \"rows\": [";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        s += i ? ",\n    " : "\n    ";
        s += json(r.rows[i]).dump();
    }
    s += r.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return s;
}

std::string report_csv(const ScenarioReport& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
        os << '\n';
    }
    return os.str();
}

ScenarioReport parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("report: ") + e.what());
    }
    if (j.value("report_version", 0) != kReportVersion) throw InvalidInput("unsupported report version");
    ScenarioReport r;
    try {
        r.config = j.at("config");
        r.anchor = j.at("anchor").get<std::string>();
        r.scope = j.at("scope").get<std::string>();
        r.predicate = j.at("predicate").get<std::string>();
        r.pass = j.at("pass").get<bool>();
        r.aggregates = j.at("aggregates");
        r.columns = j.at("columns").get<std::vector<std::string>>();
        for (const auto& row : j.at("rows")) r.rows.push_back(row.get<std::vector<json>>());
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("report: ") + e.what());
    }
    return r;
}

void write_report(const ScenarioReport& r, const std::string& prefix) {
    for (const auto& [ext, body] : {std::pair{".json", report_json(r)}, std::pair{".csv", report_csv(r)}}) {
        std::ofstream out(prefix + ext, std::ios::binary);
        if (!out) throw InvalidInput("cannot write " + prefix + ext);
        out << body;
    }
}

unsigned worker_count() {
    if (const char* e = std::getenv("RLAB_WORKERS")) {
        int v = std::atoi(e);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_trials(std::uint64_t trials, const std::function<void(std::uint64_t)>& body) {
    unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), trials));
    if (w <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i)
        pool.emplace_back([&] {
            for (std::uint64_t t; !stop && (t = next++) < trials;) {
                try {
                    body(t);
                } catch (...) {
                    std::lock_guard lk(mu);
                    if (!first) first = std::current_exception();
                    stop = true;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

}  // namespace rlab
