#include "rlab/concepts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace rlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BitVector index_set(int n, const std::vector<int>& idx) {
    BitVector m(n);
    for (int i : idx) {
        if (i < 1 || i > n) throw InvalidInput("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        if (m.get(i)) throw InvalidInput("duplicate index " + std::to_string(i));
        m.set(i, true);
    }
    return m;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int tree_depth_check(const std::vector<DecisionTree::Node>& nodes, int at, BitVector& used, int depth, int n) {
    if (at < 0 || at >= static_cast<int>(nodes.size())) throw InvalidInput("decision tree: dangling child");
    const auto& nd = nodes[at];
    if (nd.var == 0) return 1;
    if (nd.var < 1 || nd.var > n) throw InvalidInput("decision tree: variable out of range");
    if (used.get(nd.var)) throw InvalidInput("decision tree: variable repeated on a root-leaf path");
    if (depth + 1 > n) throw InvalidInput("decision tree: depth exceeds n");
    used.set(nd.var, true);
    int leaves = tree_depth_check(nodes, nd.lo, used, depth + 1, n) + tree_depth_check(nodes, nd.hi, used, depth + 1, n);
    used.set(nd.var, false);
    return leaves;
}

}  // namespace

Term Term::from_literals(int n, const std::vector<int>& lits) {
    Term t = top(n);
    for (int l : lits) {
        int i = std::abs(l);
        if (l == 0 || i > n) throw InvalidInput("literal " + std::to_string(l) + " out of range");
        (l > 0 ? t.pos : t.neg).set(i, true);
    }
    return t;
}

bool Term::satisfied(const BitVector& x) const { return pos.is_subset_of(x) && !neg.intersects(x); }

int Term::unsatisfied(const BitVector& x) const { return (pos & ~x).popcount() + (neg & x).popcount(); }

std::vector<int> Term::literals() const {
    std::vector<int> r;
    for (int i = 1; i <= pos.n(); ++i) {
        if (pos.get(i)) r.push_back(i);
        if (neg.get(i)) r.push_back(-i);
    }
    return r;
}

Concept Concept::mon_conj(int n, const std::vector<int>& indices) {
    return Concept(n, MonotoneConjunction{index_set(n, indices)});
}

Concept Concept::conj(int n, const std::vector<int>& lits) { return conj(Term::from_literals(n, lits)); }

Concept Concept::conj(const Term& t) {
    if (t.contradictory()) throw InvalidInput("conjunction contains a complementary pair; use Constant(0)");
    return Concept(t.pos.n(), Conjunction{t});
}

Concept Concept::parity(int n, const std::vector<int>& indices) { return Concept(n, Parity{index_set(n, indices)}); }

Concept Concept::majority(int n, const std::vector<int>& indices) {
    if (indices.size() % 2 == 0) throw InvalidInput("majority index set must have odd cardinality");
    return Concept(n, Majority{index_set(n, indices)});
}

Concept Concept::decision_list(int n, std::vector<DecisionList::Node> nodes, int k) {
    if (nodes.empty() || !nodes.back().term.empty()) throw InvalidInput("decision list must end with (true, v)");
    if (k < 1) throw InvalidInput("decision list width must be >= 1");
    for (auto& nd : nodes) {
        if (nd.term.pos.n() != n) throw InvalidInput("decision list: dimension mismatch");
        if (nd.term.size() > k) throw InvalidInput("decision list: term wider than k");
    }
    Concept c(n, DecisionList{std::move(nodes), k});
    if (!is_minimal_dl(c)) throw InvalidInput("decision list is not in minimal representation");
    return c;
}

Concept Concept::decision_tree(int n, std::vector<DecisionTree::Node> nodes) {
    if (nodes.empty()) throw InvalidInput("decision tree needs a root");
    BitVector used(n);
    int leaves = tree_depth_check(nodes, 0, used, 0, n);
    if (n < 63 && static_cast<std::uint64_t>(leaves) > (std::uint64_t{1} << n))
        throw InvalidInput("decision tree: more than 2^n leaves");
    return Concept(n, DecisionTree{std::move(nodes)});
}

Concept Concept::ltf(std::vector<long long> w, long long b, long long W) {
    int n = static_cast<int>(w.size());
    if (n < 1) throw InvalidInput("ltf needs n >= 1");
    long long s = std::llabs(b);
    for (auto v : w) s += std::llabs(v);
    if (s > W) throw InvalidInput("ltf weight budget exceeded: " + std::to_string(s) + " > " + std::to_string(W));
    return Concept(n, LtfBool{std::move(w), b, W});
}

Concept Concept::singleton(const BitVector& x) { return Concept(x.n(), Singleton{x}); }

Concept Concept::dictator(int n, int index, bool positive) {
    if (index < 1 || index > n) throw InvalidInput("dictator index out of range");
    return Concept(n, Dictator{index, positive});
}

Concept Concept::constant(int n, bool value) {
    if (n < 1) throw InvalidInput("constant needs n >= 1");
    return Concept(n, Constant{value});
}

std::string Concept::kind() const {
    static const char* names[] = {"mon_conj", "conj", "parity", "majority", "dl",
                                  "tree", "ltf", "singleton", "dictator", "constant"};
    return names[v_.index()];
}

bool Concept::evaluate(const BitVector& x) const {
    if (x.n() != n_) throw InvalidInput("evaluate: dimension mismatch");
    return std::visit(
        overloaded{
            [&](const MonotoneConjunction& c) { return c.indices.is_subset_of(x); },
            [&](const Conjunction& c) { return c.term.satisfied(x); },
            [&](const Parity& c) { return ((c.indices & x).popcount() & 1) == 1; },
            [&](const Majority& c) { return 2 * (c.indices & x).popcount() >= c.indices.popcount(); },
            [&](const DecisionList& c) {
                for (const auto& nd : c.nodes)
                    if (nd.term.satisfied(x)) return nd.value;
                return c.nodes.back().value;
            },
            [&](const DecisionTree& c) {
                int at = 0;
                while (c.nodes[at].var != 0) at = x.get(c.nodes[at].var) ? c.nodes[at].hi : c.nodes[at].lo;
                return c.nodes[at].label;
            },
            [&](const LtfBool& c) {
                long long s = c.b;
                for (int i = 1; i <= n_; ++i)
                    if (x.get(i)) s += c.w[i - 1];
                return s >= 0;
            },
            [&](const Singleton& c) { return c.point == x; },
            [&](const Dictator& c) { return x.get(c.index) == c.positive; },
            [&](const Constant& c) { return c.value; }},
        v_);
}

int Concept::size() const {
    return std::visit(overloaded{[](const MonotoneConjunction& c) { return c.indices.popcount(); },
                                 [](const Conjunction& c) { return c.term.size(); },
                                 [](const Parity& c) { return c.indices.popcount(); },
                                 [](const Majority& c) { return c.indices.popcount(); },
                                 [](const DecisionList& c) {
                                     int s = 0;
                                     for (auto& nd : c.nodes) s += std::max(1, nd.term.size());
                                     return s;
                                 },
                                 [](const DecisionTree& c) { return static_cast<int>(c.nodes.size()); },
                                 [](const LtfBool& c) {
                                     return static_cast<int>(std::count_if(c.w.begin(), c.w.end(),
                                                                           [](long long v) { return v != 0; }));
                                 },
                                 [](const Singleton& c) { return c.point.n(); },
                                 [](const Dictator&) { return 1; }, [](const Constant&) { return 0; }},
                      v_);
}

std::string Concept::to_string() const {
    return std::visit(
        overloaded{[](const MonotoneConjunction& c) { return "mon_conj{" + join(c.indices.indices()) + "}"; },
                   [](const Conjunction& c) { return "conj{" + join(c.term.literals()) + "}"; },
                   [](const Parity& c) { return "parity{" + join(c.indices.indices()) + "}"; },
                   [](const Majority& c) { return "majority{" + join(c.indices.indices()) + "}"; },
                   [](const DecisionList& c) {
                       std::string s = "dl[";
                       for (std::size_t j = 0; j < c.nodes.size(); ++j) {
                           auto l = c.nodes[j].term.literals();
                           s += (j ? "," : "") + std::string("(") + (l.empty() ? "true" : "{" + join(l) + "}") + "," +
                                (c.nodes[j].value ? "1" : "0") + ")";
                       }
                       return s + "]";
                   },
                   [](const DecisionTree& c) { return "tree[" + std::to_string(c.nodes.size()) + " nodes]"; },
                   [](const LtfBool& c) {
                       std::vector<int> w(c.w.begin(), c.w.end());
                       return "ltf{w=" + join(w) + ";b=" + std::to_string(c.b) + "}";
                   },
                   [](const Singleton& c) { return "singleton{" + c.point.to_string() + "}"; },
                   [](const Dictator& c) {
                       return std::string("dictator{") + (c.positive ? "" : "-") + std::to_string(c.index) + "}";
                   },
                   [](const Constant& c) { return std::string("constant{") + (c.value ? "1" : "0") + "}"; }},
        v_);
}

std::uint64_t class_size(const ClassSpec& spec, int n) {
    auto pow_sat = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) {
            if (r > UINT64_MAX / b) return UINT64_MAX;
            r *= b;
        }
        return r;
    };
    const auto& s = spec.name;
    if (s == "mon_conj") return pow_sat(2, n) - 1;
    if (s == "conj") return pow_sat(3, n) + 1;
    if (s == "parity" || s == "singleton") return pow_sat(2, n);
    if (s == "majority") return pow_sat(2, n - 1);
    if (s == "dictator") return n;
    if (s == "dictator_signed") return 2 * n;
    if (s == "constant") return 2;
    if (s == "ltf_unit") return pow_sat(3, n) * (2 * n + 2);
    if (s == "ltf") {
        std::uint64_t total = 0;
        for (int k = 0; k <= n + 1 && k <= spec.W; ++k)
            total += pow_sat(2, k) * binomial(n + 1, k) * binomial(static_cast<int>(spec.W), k);
        return total;
    }
    if (s == "dl") {
        if (spec.k != 1) return UINT64_MAX;
        std::uint64_t total = 0, perm = 1;
        for (int r = 0; r <= n; ++r) {
            total += perm * pow_sat(4, r) * 2;
            perm *= (n - r);
        }
        return total;
    }
    throw InvalidInput("unknown class '" + s + "'");
}

std::vector<Concept> enumerate_class(const ClassSpec& spec, int n, std::uint64_t budget) {
    std::uint64_t count = class_size(spec, n);
    if (count > budget)
        throw BudgetExceeded("class '" + spec.name + "' at n=" + std::to_string(n) + " has " +
                             (count == UINT64_MAX ? std::string("too many") : std::to_string(count)) +
                             " members, budget " + std::to_string(budget));
    std::vector<Concept> out;
    out.reserve(count);
    const auto& s = spec.name;
    const std::uint64_t N = std::uint64_t{1} << n;
    if (s == "mon_conj" || s == "parity" || s == "singleton" || s == "majority") {
        for (std::uint64_t m = (s == "mon_conj"); m < N; ++m) {
            BitVector b = BitVector::from_mask(n, m);
            if (s == "mon_conj") out.push_back(Concept::mon_conj(n, b.indices()));
            if (s == "parity") out.push_back(Concept::parity(n, b.indices()));
            if (s == "singleton") out.push_back(Concept::singleton(b));
            if (s == "majority" && b.popcount() % 2 == 1) out.push_back(Concept::majority(n, b.indices()));
        }
    } else if (s == "conj") {
        std::vector<int> digit(n, 0);
        while (true) {
            std::vector<int> lits;
            for (int i = 0; i < n; ++i)
                if (digit[i]) lits.push_back(digit[i] == 1 ? i + 1 : -(i + 1));
            out.push_back(Concept::conj(n, lits));
            int i = 0;
            while (i < n && digit[i] == 2) digit[i++] = 0;
            if (i == n) break;
            ++digit[i];
        }
        out.push_back(Concept::constant(n, false));
    } else if (s == "dictator" || s == "dictator_signed") {
        for (int i = 1; i <= n; ++i) {
            out.push_back(Concept::dictator(n, i, true));
            if (s == "dictator_signed") out.push_back(Concept::dictator(n, i, false));
        }
    } else if (s == "constant") {
        out.push_back(Concept::constant(n, false));
        out.push_back(Concept::constant(n, true));
    } else if (s == "ltf_unit") {
        std::vector<long long> w(n, -1);
        while (true) {
            for (long long b = -(n + 1); b <= n; ++b) out.push_back(Concept::ltf(w, b, 2 * n + 1));
            int i = 0;
            while (i < n && w[i] == 1) w[i++] = -1;
            if (i == n) break;
            ++w[i];
        }
    } else if (s == "ltf") {
        const long long W = spec.W;
        std::vector<long long> v(n + 1, 0);
        std::function<void(int, long long)> rec = [&](int at, long long left) {
            if (at == n + 1) {
                out.push_back(Concept::ltf(std::vector<long long>(v.begin(), v.begin() + n), v[n], W));
                return;
            }
            for (long long a = -left; a <= left; ++a) {
                v[at] = a;
                rec(at + 1, left - std::llabs(a));
            }
            v[at] = 0;
        };
        rec(0, W);
    } else if (s == "dl") {
        std::vector<int> vars;
        std::vector<bool> used(n + 1, false);
        std::function<void()> rec = [&]() {
            int r = static_cast<int>(vars.size());
            for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << r); ++signs)
                for (std::uint64_t vals = 0; vals < (std::uint64_t{1} << (r + 1)); ++vals) {
                    std::vector<DecisionList::Node> nodes;
                    for (int j = 0; j < r; ++j)
                        nodes.push_back({Term::from_literals(n, {(signs >> j) & 1 ? -vars[j] : vars[j]}),
                                         static_cast<bool>((vals >> j) & 1)});
                    nodes.push_back({Term::top(n), static_cast<bool>((vals >> r) & 1)});
                    out.push_back(Concept::decision_list(n, std::move(nodes), 1));
                }
            for (int i = 1; i <= n; ++i) {
                if (used[i]) continue;
                used[i] = true;
                vars.push_back(i);
                rec();
                vars.pop_back();
                used[i] = false;
            }
        };
        rec();
    } else {
        throw InvalidInput("class '" + s + "' is not enumerable");
    }
    return out;
}

double influence(const Concept& c, int i) {
    const int n = c.n();
    if (i < 1 || i > n) throw InvalidInput("influence: index out of range");
    require_exact(n, "influence");
    std::uint64_t piv = 0;
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    for_each_point(n, [&](std::uint64_t x) {
        if (!(x & bit) && c.evaluate_mask(x) != c.evaluate_mask(x | bit)) piv += 2;
    });
    return std::ldexp(static_cast<double>(piv), -n);
}

double fourier_singleton(const Concept& c, int i) {
    const int n = c.n();
    if (i < 1 || i > n) throw InvalidInput("fourier_singleton: index out of range");
    require_exact(n, "fourier_singleton");
    long long s = 0;
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    for_each_point(n, [&](std::uint64_t x) {
        int f = c.evaluate_mask(x) ? -1 : 1;
        int xi = (x & bit) ? -1 : 1;
        s += f * xi;
    });
    return std::ldexp(static_cast<double>(s), -n);
}

std::vector<Term> embedding_terms(int n, int k) {
    if (k < 1 || k > 3) throw BudgetExceeded("dl_embed supports 1 <= k <= 3");
    std::vector<std::vector<int>> keys;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int from, int len) {
        if (static_cast<int>(cur.size()) == len) {
            keys.push_back(cur);
            return;
        }
        for (int v = from; v <= n; ++v)
            for (int sgn : {1, -1}) {
                cur.push_back(sgn * v);
                rec(v + 1, len);
                cur.pop_back();
            }
    };
    for (int len = 1; len <= k; ++len) rec(1, len);
    if (keys.size() > static_cast<std::size_t>(BitVector::kMaxDim))
        throw BudgetExceeded("dl_embed: " + std::to_string(keys.size()) + " coordinates exceed " +
                             std::to_string(BitVector::kMaxDim));
    std::vector<Term> terms;
    for (auto& key : keys) terms.push_back(Term::from_literals(n, key));
    return terms;
}

BitVector dl_embed(const BitVector& x, int k) {
    auto terms = embedding_terms(x.n(), k);
    BitVector y(static_cast<int>(terms.size()));
    for (std::size_t j = 0; j < terms.size(); ++j) y.set(static_cast<int>(j) + 1, terms[j].satisfied(x));
    return y;
}

Concept dl_to_embedded(const Concept& c, int k) {
    const auto* dl = std::get_if<DecisionList>(&c.variant());
    if (!dl) throw InvalidInput("dl_to_embedded needs a decision list");
    auto terms = embedding_terms(c.n(), k);
    const int m = static_cast<int>(terms.size());
    std::vector<DecisionList::Node> nodes;
    for (const auto& nd : dl->nodes) {
        if (nd.term.empty()) {
            nodes.push_back({Term::top(m), nd.value});
            continue;
        }
        auto it = std::find(terms.begin(), terms.end(), nd.term);
        if (it == terms.end()) throw InvalidInput("term wider than embedding width");
        nodes.push_back({Term::from_literals(m, {static_cast<int>(it - terms.begin()) + 1}), nd.value});
    }
    return Concept::decision_list(m, std::move(nodes), 1);
}

int activated_level(const Concept& c, const BitVector& x) {
    if (const auto* dl = std::get_if<DecisionList>(&c.variant())) {
        for (std::size_t j = 0; j < dl->nodes.size(); ++j)
            if (dl->nodes[j].term.satisfied(x)) return static_cast<int>(j) + 1;
        return static_cast<int>(dl->nodes.size());
    }
    if (const auto* t = std::get_if<DecisionTree>(&c.variant())) {
        int at = 0, depth = 0;
        while (t->nodes[at].var != 0) {
            at = x.get(t->nodes[at].var) ? t->nodes[at].hi : t->nodes[at].lo;
            ++depth;
        }
        return depth;
    }
    throw InvalidInput("activated_level needs a decision list or tree");
}

bool consistent_to_depth(const Concept& c, const Concept& h, int d) {
    if (c.variant().index() != h.variant().index() ||
        !(std::holds_alternative<DecisionList>(c.variant()) || std::holds_alternative<DecisionTree>(c.variant())))
        throw InvalidInput("consistent_to_depth needs two decision lists or two decision trees");
    if (c.n() != h.n()) throw InvalidInput("consistent_to_depth: dimension mismatch");
    if (c.n() > 20) throw BudgetExceeded("consistent_to_depth needs n <= 20");
    bool ok = true;
    for_each_point(c.n(), [&](std::uint64_t m) {
        if (!ok) return;
        BitVector x = BitVector::from_mask(c.n(), m);
        if (activated_level(c, x) <= d && activated_level(h, x) <= d && c.evaluate(x) != h.evaluate(x)) ok = false;
    });
    return ok;
}

namespace {

// Variables mentioned by any node, and a sweep over their assignments (others fixed to 0).
template <class F>
void sweep_support(const DecisionList& dl, int n, F&& f) {
    BitVector supp(n);
    for (auto& nd : dl.nodes) supp = supp | nd.term.pos | nd.term.neg;
    auto vars = supp.indices();
    if (vars.size() > BitVector::kExactMaxDim) throw BudgetExceeded("decision list support exceeds 24 variables");
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
        BitVector x(n);
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((a >> j) & 1) x.set(vars[j], true);
        f(x);
    }
}

}  // namespace

bool is_minimal_dl(const Concept& c) {
    const auto* dl = std::get_if<DecisionList>(&c.variant());
    if (!dl || dl->nodes.empty() || !dl->nodes.back().term.empty()) return false;
    for (std::size_t i = 0; i < dl->nodes.size(); ++i) {
        if (dl->nodes[i].term.contradictory()) return false;
        for (std::size_t j = i + 1; j < dl->nodes.size(); ++j)
            if (dl->nodes[i].term == dl->nodes[j].term) return false;
    }
    std::vector<bool> reached(dl->nodes.size(), false);
    sweep_support(*dl, c.n(), [&](const BitVector& x) { reached[activated_level(c, x) - 1] = true; });
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

Concept make_minimal_dl(int n, std::vector<DecisionList::Node> nodes, int k) {
    if (nodes.empty() || !nodes.back().term.empty())
        nodes.push_back({Term::top(n), nodes.empty() ? false : nodes.back().value});
    DecisionList work{nodes, k};
    std::vector<char> reached(nodes.size(), 0), always(nodes.size(), 1);
    // reached[j]: some x activates j. always[j]: every x reaching j satisfies term j.
    sweep_support(work, n, [&](const BitVector& x) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (nodes[j].term.satisfied(x)) {
                reached[j] = 1;
                return;
            }
            always[j] = 0;
        }
    });
    std::vector<DecisionList::Node> out;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (nodes[j].term.contradictory() || !reached[j]) continue;
        if (always[j]) {
            out.push_back({Term::top(n), nodes[j].value});
            break;
        }
        out.push_back(nodes[j]);
    }
    return Concept::decision_list(n, std::move(out), k);
}

}  // namespace rlab
