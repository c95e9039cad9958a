// Acceptance run: one line per criterion, "criterion N: PASS|FAIL detail".

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "properties.hpp"
#include "rlab/cnf.hpp"
#include "rlab/dimensions.hpp"
#include "rlab/harness.hpp"
#include "rlab/robustrisk.hpp"

using namespace rlab;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s <= limit_s;
    bool ok = o.pass && in_time;
    failures += !ok;
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " " << o.detail << " [" << os.str() << " s"
              << (in_time ? "" : ", over the limit") << "]" << std::endl;
}

ScenarioReport run(json j) {
    j["version"] = 1;
    if (!j.contains("base_seed") && j["scenario"] != "dimension-table") j["base_seed"] = 20261019;
    return run_scenario(parse_config(j));
}

std::string agg(const ScenarioReport& r, std::initializer_list<const char*> keys) {
    std::ostringstream os;
    for (const char* k : keys) os << k << "=" << r.aggregates.at(k).dump() << " ";
    return os.str();
}

std::vector<int> range(int a, int b) {
    std::vector<int> v(b - a + 1);
    std::iota(v.begin(), v.end(), a);
    return v;
}

}  // namespace

int main() {
    criterion(1, 5, [] {
        const int n = 12;
        std::ostringstream os;
        bool ok = true;
        for (int rho : {2, 3}) {
            auto c1 = Concept::mon_conj(n, range(1, 2 * rho)), c2 = Concept::mon_conj(n, range(2 * rho + 1, 4 * rho));
            double r = robust_risk_exact(c1, c2, rho, Distribution::uniform(n)).value;
            double floor_risk = (1 - std::ldexp(1.0, -2 * rho)) / 2;
            ok = ok && r >= floor_risk;
            if (rho == 2) ok = ok && r >= 15.0 / 32;
            os << "rho=" << rho << " risk=" << r << " bound=" << floor_risk << " ";
        }
        return Outcome{ok, os.str()};
    });

    criterion(2, 30, [] {
        auto r = run({{"scenario", "monconj-lower-bound"}, {"n", 12}, {"rho", 3}, {"kappa", 1.5}, {"trials", 10000}});
        double e = r.aggregates.at("all_negative_expected");
        auto ci = r.aggregates.at("all_negative_ci99");
        bool ok = ci[0].get<double>() <= e && e <= ci[1].get<double>();
        return Outcome{ok, agg(r, {"m", "all_negative_rate", "all_negative_expected", "all_negative_ci99"})};
    });

    criterion(3, 120, [] {
        auto r = run({{"scenario", "monconj-lower-bound"}, {"n", 16}, {"rho", 4}, {"kappa", 1.5}, {"trials", 2000}});
        return Outcome{r.aggregates.at("mean_risk").get<double>() >= 5.0 / 48 - kTolerance,
                       agg(r, {"mean_risk", "lower_bound"})};
    });

    criterion(4, 120, [] {
        auto r = run({{"scenario", "lmq-lower-bound"}, {"n", 16}, {"rho", 4}, {"m", 16}, {"queries", 8}, {"trials", 2000}});
        return Outcome{r.pass, agg(r, {"mean_risk", "lower_bound"})};
    });

    criterion(5, 300, [] {
        auto r = run({{"scenario", "monconj-threshold"}, {"n", 20}, {"epsilon", 0.1}, {"delta", 0.1}, {"alpha", 2},
                      {"trials", 500}});
        return Outcome{r.pass, agg(r, {"m_uniform", "m_product", "success_rate_uniform", "success_rate_product"})};
    });

    criterion(6, 60, [] {
        auto r = run({{"scenario", "leq-conjunction-queries"}, {"n", 16}, {"epsilon", 0.1}, {"delta", 0.1},
                      {"trials", 1000}});
        return Outcome{r.pass, agg(r, {"m", "query_bound", "max_queries"})};
    });

    criterion(7, 180, [] {
        bool ok = true;
        std::ostringstream os;
        for (int n : {32, 64})
            for (int W : {4, 8}) {
                auto r = run({{"scenario", "leq-winnow-ltf"}, {"n", n}, {"W", W}, {"kappa", 8}, {"trials", 200}});
                ok = ok && r.pass;
                os << "n=" << n << " W=" << W << " max=" << r.aggregates.at("max_queries").dump()
                   << " bound=" << r.aggregates.at("query_bound").dump() << "; ";
            }
        return Outcome{ok, os.str()};
    });

    criterion(8, 60, [] {
        bool ok = true;
        std::ostringstream os;
        for (double tau : {0.1, 0.05}) {
            auto r = run({{"scenario", "precision-perceptron"}, {"B", 1}, {"tau", tau}, {"trials", 500}});
            ok = ok && r.pass;
            os << "tau=" << tau << " " << agg(r, {"max_mistakes", "mistake_bound"});
        }
        return Outcome{ok, os.str()};
    });

    criterion(9, 120, [] {
        auto p = run({{"scenario", "parity-exact"}, {"n", 12}, {"alpha", 2}, {"trials", 500}});
        auto m = run({{"scenario", "majority-fourier"}, {"n", 9}, {"delta", 0.1}, {"kappa", 32}, {"trials", 500}});
        return Outcome{p.pass && m.pass, "parity " + agg(p, {"recovery_rate", "min_other_error", "error_floor"}) +
                                             "majority " + agg(m, {"m", "recovery_rate"})};
    });

    criterion(10, 600, [] {
        bool ok = true;
        std::ostringstream os;
        for (int n : {3, 4, 5}) {
            auto r = run({{"scenario", "dimension-table"}, {"n", n}});
            ok = ok && r.pass;
            os << "table n=" << n << (r.pass ? " ok" : " MISMATCH") << "; ";
        }
        for (int n = 6; n <= 8; ++n) {
            auto ltf = FiniteClass::on_cube(enumerate_class({"ltf_unit"}, n), n);
            int v = vc_dimension(robust_loss_class(ltf, ltf, n, n - 1)).value;
            ok = ok && v == 2;
            os << "robust-loss VC n=" << n << " = " << v << "; ";
        }
        return Outcome{ok, os.str()};
    });

    criterion(11, 60, [] {
        bool ok = true;
        std::ostringstream os;
        for (int k : {3, 4, 5}) {
            double tau = std::ldexp(1.0, -k);
            auto g = threshold_grid(1.0, tau / 8);
            SearchOptions o;
            o.tau = tau;
            o.metric = g.metric();
            int lit = littlestone_dimension(g.cls, o).value;
            int want = static_cast<int>(std::floor(std::log2(1.0 / tau) - 1));
            ok = ok && lit == want;
            os << "tau=1/" << (1 << k) << " Lit=" << lit << " expected=" << want << "; ";
        }
        return Outcome{ok, os.str()};
    });

    criterion(12, 600, [] {
        std::vector<std::pair<std::string, std::string>> suites{
            {"risk-triangle", props::risk_triangle(10000, 1)},   {"loglip-facts", props::loglip_facts(12, 2)},
            {"sat-monotone", props::sat_monotone(200, 3)},      {"closure-width", props::closure_width(300, 4)},
            {"embedding", props::embedding(12, 5)},             {"sauer-shelah", props::sauer_shelah(100, 6)},
            {"vc-lit-log-chain", props::dimension_chain(100, 7)}};
        bool ok = true;
        std::ostringstream os;
        for (auto& [name, err] : suites) {
            ok = ok && err.empty();
            os << name << (err.empty() ? " ok" : " FAILED: " + err) << "; ";
        }
        return Outcome{ok, os.str()};
    });

    criterion(13, 60, [] {
        // Not desk-reproducible at full scale; the substitutes are checked here.
        bool ok = true;
        for (int k = 1; k <= 4; ++k)
            for (int a : {1, 2, 3}) {
                auto cf = kcnf_constants(k, Rational(a)), rec = kcnf_recurrence(k, Rational(a));
                ok = ok && cf.c3 >= cf.eta / 2 * cf.c4 && cf.c2 >= rec.c2 && cf.c3 >= rec.c3 && cf.c4 >= rec.c4 &&
                     cf.c1_exponent >= rec.c1_exponent;
            }
        auto ltf = FiniteClass::on_cube(enumerate_class({"ltf_unit"}, 4), 4);
        ok = ok && vc_dimension(robust_loss_class(ltf, ltf, 4, 3)).value == 2;
        return Outcome{ok,
                       "full-scale k-CNF constants and the cubic robust-loss VC bound for real halfspaces are not "
                       "reproduced; substitutes: constants calculator cross-check for k<=4, alpha in {1,2,3} and the "
                       "exact small-n robust-loss VC values of criterion 10"};
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
