#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rlab/cnf.hpp"
#include "rlab/error.hpp"
#include "rlab/harness.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rlab::InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void summary(const rlab::ScenarioReport& r, std::ostream& os) {
    os << r.config.value("scenario", "") << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.predicate << '\n'
       << "  anchor: " << r.anchor << '\n'
       << "  " << r.aggregates.dump() << '\n';
}

int cmd_list() {
    for (const auto& s : rlab::list_scenarios()) {
        std::cout << s.id << "\n  " << s.description << "\n  anchor: " << s.anchor << "\n  fields:";
        for (const auto& f : s.fields) std::cout << ' ' << f;
        std::cout << '\n';
    }
    return kPass;
}

int cmd_run(const std::string& config, const std::string& output, bool quiet) {
    auto runs = rlab::load_configs(config);
    bool all = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto& c = runs[i];
        auto t0 = std::chrono::steady_clock::now();
        auto r = rlab::run_scenario(c);
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string prefix = !output.empty() ? output : c.output.value_or("");
        if (!prefix.empty() && runs.size() > 1 && output == prefix) prefix += "-" + std::to_string(i);
        if (!prefix.empty()) rlab::write_report(r, prefix);
        if (!quiet) summary(r, std::cout);
        std::cerr << "  wall " << r.wall_seconds << " s\n";
        all = all && r.pass;
    }
    return all ? kPass : kFail;
}

int cmd_report(const std::string& input, bool replay, bool csv) {
    const auto text = slurp(input);
    auto r = rlab::parse_report(text);
    if (csv) std::cout << rlab::report_csv(r);
    else summary(r, std::cout);
    if (replay) {
        auto again = rlab::run_scenario(rlab::parse_config(r.config));
        if (rlab::report_json(again) != text) {
            std::cout << "replay: MISMATCH\n";
            return kFail;
        }
        std::cout << "replay: identical\n";
    }
    return r.pass ? kPass : kFail;
}

int cmd_cnf(const std::string& input, int n, bool close, int rho) {
    auto phi = rlab::CnfFormula::from_dimacs(n, slurp(input));
    if (close) phi = rlab::resolution_closure(phi);
    std::cout << phi.to_dimacs();
    std::cerr << "clauses " << phi.size() << ", width " << phi.width() << ", dropped tautologies "
              << phi.dropped_tautologies() << '\n';
    if (rho >= 0) {
        auto t = rlab::sat_table(phi, rho);
        std::cerr << "points within " << rho << " of a model: " << std::count(t.begin(), t.end(), 1) << " of "
                  << t.size() << '\n';
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rlab: verification lab for exact-in-the-ball robust learning"};
    app.require_subcommand(1);

    app.add_subcommand("list", "list scenarios with their anchors and accepted fields");

    auto* run = app.add_subcommand("run", "run one config or a batch of configs");
    std::string config, output;
    bool quiet = false;
    run->add_option("--config", config, "JSON config file")->required()->check(CLI::ExistingFile);
    run->add_option("--output", output, "prefix for <prefix>.json and <prefix>.csv");
    run->add_flag("--quiet", quiet, "no summary on stdout");

    auto* rep = app.add_subcommand("report", "summarize a JSON report");
    std::string input;
    bool replay = false, csv = false;
    rep->add_option("--input", input, "JSON report")->required()->check(CLI::ExistingFile);
    rep->add_flag("--replay", replay, "rerun the echoed config and compare bytes");
    rep->add_flag("--csv", csv, "print the per-trial CSV instead of the summary");

    auto* cnf = app.add_subcommand("cnf", "normalize a clause file (signed integers, 0-terminated lines)");
    std::string cnf_in;
    int n = 0, rho = -1;
    bool close = false;
    cnf->add_option("--input", cnf_in)->required()->check(CLI::ExistingFile);
    cnf->add_option("--n", n, "number of variables")->required();
    cnf->add_flag("--closure", close, "apply resolution closure");
    cnf->add_option("--rho", rho, "count points within rho of a model (n <= 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }

    try {
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand(run)) return cmd_run(config, output, quiet);
        if (app.got_subcommand(rep)) return cmd_report(input, replay, csv);
        return cmd_cnf(cnf_in, n, close, rho);
    } catch (const rlab::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const rlab::BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kUsage;
    }
}
