#include "rlab/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace rlab {

namespace {

std::pair<int, int> lit_key(int l) { return {std::abs(l), l < 0}; }

bool lit_less(int a, int b) { return lit_key(a) < lit_key(b); }

bool tautological(const Clause& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] == -c[i + 1]) return true;
    return false;
}

bool lit_true(int l, std::uint64_t x) { return (((x >> (std::abs(l) - 1)) & 1) != 0) == (l > 0); }

}  // namespace

Clause normalize_clause(Clause c) {
    std::sort(c.begin(), c.end(), lit_less);
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool clause_less(const Clause& a, const Clause& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lit_less);
}

CnfFormula::CnfFormula(int n, std::vector<Clause> clauses) : n_(n) {
    if (n < 1 || n > BitVector::kMaxDim) throw InvalidInput("CnfFormula: dimension out of range");
    for (auto& c : clauses) {
        for (int l : c)
            if (l == 0 || std::abs(l) > n) throw InvalidInput("CnfFormula: literal out of range");
        c = normalize_clause(std::move(c));
        if (tautological(c)) {
            ++dropped_;
            continue;
        }
        clauses_.push_back(std::move(c));
    }
    std::sort(clauses_.begin(), clauses_.end(), clause_less);
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
    for (auto& c : clauses_) width_ = std::max(width_, static_cast<int>(c.size()));
}

bool CnfFormula::has_empty_clause() const { return !clauses_.empty() && clauses_.front().empty(); }

bool CnfFormula::satisfied(const BitVector& x) const {
    for (auto& c : clauses_) {
        bool any = false;
        for (int l : c)
            if (x.get(std::abs(l)) == (l > 0)) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

bool CnfFormula::satisfied_mask(std::uint64_t x) const {
    for (auto& c : clauses_) {
        bool any = false;
        for (int l : c)
            if (lit_true(l, x)) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream os;
    for (auto& c : clauses_) {
        for (int l : c) os << l << ' ';
        os << "0\n";
    }
    return os.str();
}

CnfFormula CnfFormula::from_dimacs(int n, const std::string& text) {
    std::istringstream is(text);
    std::vector<Clause> cs;
    Clause cur;
    std::string tok;
    while (is >> tok) {
        if (tok == "c" || tok == "p") {
            std::string rest;
            std::getline(is, rest);
            continue;
        }
        int l = std::stoi(tok);
        if (l == 0) {
            cs.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(l);
        }
    }
    if (!cur.empty()) throw InvalidInput("dimacs: clause not 0-terminated");
    return CnfFormula(n, std::move(cs));
}

std::vector<char> sat_table(const CnfFormula& phi, int rho) {
    const int n = phi.n();
    if (n > 20) throw BudgetExceeded("sat_set needs n <= 20");
    if (rho < 0) throw InvalidInput("sat_set: negative radius");
    const std::size_t N = std::size_t{1} << n;
    std::vector<char> cur(N, 0);
    for (std::size_t x = 0; x < N; ++x) cur[x] = phi.satisfied_mask(x);
    for (int r = 0; r < std::min(rho, n); ++r) {
        std::vector<char> next = cur;
        for (std::size_t x = 0; x < N; ++x)
            if (cur[x])
                for (int i = 0; i < n; ++i) next[x ^ (std::size_t{1} << i)] = 1;
        cur.swap(next);
    }
    return cur;
}

std::vector<BitVector> sat_set(const CnfFormula& phi, int rho) {
    auto t = sat_table(phi, rho);
    std::vector<BitVector> out;
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t[x]) out.push_back(BitVector::from_mask(phi.n(), x));
    return out;
}

CnfFormula resolution_closure(const CnfFormula& phi, std::size_t budget) {
    auto cmp = [](const Clause& a, const Clause& b) { return clause_less(a, b); };
    std::set<Clause, decltype(cmp)> all(cmp);
    std::vector<Clause> list;
    for (auto& c : phi.clauses())
        if (all.insert(c).second) list.push_back(c);
    // Pairs (a, b) with b < a processed once; new clauses are appended and later paired with everything before them.
    for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            const Clause A = list[a];
            const Clause B = list[b];
            for (int l : A) {
                if (!std::binary_search(B.begin(), B.end(), -l, lit_less)) continue;
                Clause r;
                for (int u : A)
                    if (u != l) r.push_back(u);
                for (int u : B)
                    if (u != -l) r.push_back(u);
                r = normalize_clause(std::move(r));
                if (tautological(r)) continue;
                if (all.insert(r).second) {
                    list.push_back(r);
                    if (list.size() > budget)
                        throw BudgetExceeded("resolution_closure exceeded " + std::to_string(budget) +
                                             " clauses (partial size " + std::to_string(list.size()) + ")");
                }
            }
        }
    }
    return CnfFormula(phi.n(), std::move(list));
}

std::vector<int> minimal_cover(const CnfFormula& phi, std::size_t budget) {
    const auto& cs = phi.clauses();
    if (cs.size() > budget)
        throw BudgetExceeded("minimal_cover: " + std::to_string(cs.size()) + " clauses exceed budget " +
                             std::to_string(budget));
    if (phi.has_empty_clause()) throw InvalidInput("minimal_cover: empty clause cannot be covered");
    std::vector<int> best;
    for (auto& c : cs) best.push_back(c.front());
    best = normalize_clause(best);
    std::vector<int> chosen;
    std::function<void()> rec = [&]() {
        if (chosen.size() >= best.size()) return;
        const Clause* open = nullptr;
        for (auto& c : cs) {
            bool hit = std::any_of(c.begin(), c.end(),
                                   [&](int l) { return std::find(chosen.begin(), chosen.end(), l) != chosen.end(); });
            if (!hit && (!open || c.size() < open->size())) open = &c;
        }
        if (!open) {
            best = normalize_clause(chosen);
            return;
        }
        if (chosen.size() + 1 >= best.size()) return;
        for (int l : *open) {
            chosen.push_back(l);
            rec();
            chosen.pop_back();
        }
    };
    rec();
    return best;
}

std::vector<Clause> variable_disjoint_matching(const CnfFormula& phi) {
    std::vector<Clause> m;
    std::set<int> used;
    for (auto& c : phi.clauses()) {
        if (std::any_of(c.begin(), c.end(), [&](int l) { return used.count(std::abs(l)); })) continue;
        for (int l : c) used.insert(std::abs(l));
        m.push_back(c);
    }
    return m;
}

std::vector<Clause> literal_disjoint_matching(const CnfFormula& phi) {
    std::vector<Clause> m;
    std::set<int> used;
    for (auto& c : phi.clauses()) {
        if (std::any_of(c.begin(), c.end(), [&](int l) { return used.count(l); })) continue;
        for (int l : c) used.insert(l);
        m.push_back(c);
    }
    return m;
}

CnfFormula discrepancy_formula(const Concept& c, const Concept& h, int i, int j, bool close) {
    const auto* dc = std::get_if<DecisionList>(&c.variant());
    const auto* dh = std::get_if<DecisionList>(&h.variant());
    if (!dc || !dh) throw InvalidInput("discrepancy_formula needs two decision lists");
    if (c.n() != h.n()) throw InvalidInput("discrepancy_formula: dimension mismatch");
    if (i < 1 || i > static_cast<int>(dc->nodes.size()) || j < 1 || j > static_cast<int>(dh->nodes.size()))
        throw InvalidInput("discrepancy_formula: node index out of range");
    std::vector<Clause> cs;
    auto add = [&](const DecisionList& dl, int upto) {
        for (int a = 0; a < upto - 1; ++a) {
            Clause neg;
            for (int l : dl.nodes[a].term.literals()) neg.push_back(-l);
            cs.push_back(neg);
        }
        for (int l : dl.nodes[upto - 1].term.literals()) cs.push_back({l});
    };
    add(*dc, i);
    add(*dh, j);
    CnfFormula phi(c.n(), std::move(cs));
    return close ? resolution_closure(phi) : phi;
}

BitVector matching_embed(const BitVector& x, const std::vector<Clause>& M) {
    std::set<int> vars;
    for (auto& c : M)
        for (int l : c)
            if (!vars.insert(std::abs(l)).second) throw InvalidInput("matching_embed: clauses share a variable");
    BitVector y(std::max<int>(1, static_cast<int>(M.size())));
    for (std::size_t j = 0; j < M.size(); ++j) {
        bool t = false;
        for (int l : M[j])
            if (x.get(std::abs(l)) == (l > 0)) t = true;
        y.set(static_cast<int>(j) + 1, t);
    }
    return y;
}

std::uint64_t matching_embed_mask(std::uint64_t x, const std::vector<Clause>& M) {
    std::uint64_t y = 0;
    for (std::size_t j = 0; j < M.size(); ++j)
        for (int l : M[j])
            if (lit_true(l, x)) {
                y |= std::uint64_t{1} << j;
                break;
            }
    return y;
}

namespace {

Rational rpow(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

KcnfConstants kcnf_constants(int k, const Rational& alpha) {
    if (k < 1) throw InvalidInput("kcnf_constants: k >= 1");
    if (alpha < 1) throw InvalidInput("kcnf_constants: alpha >= 1");
    if (k == 1) {
        Rational eta = 1 / (1 + alpha);
        return {0, 0, 4 / (eta * eta), 2 / eta, eta};
    }
    Rational eta = 1 / rpow(1 + alpha, k);
    Rational base = 8 / (eta * eta);
    Rational pk1 = rpow(base, k - 1);
    return {2 * k * k * pk1, 2 * pk1, pk1 * base, (2 / eta) * pk1, eta};
}

KcnfConstants kcnf_recurrence(int k, const Rational& alpha) {
    if (k < 1) throw InvalidInput("kcnf_recurrence: k >= 1");
    KcnfConstants c = kcnf_constants(1, alpha);
    for (int level = 2; level <= k; ++level) {
        Rational eta = 1 / rpow(1 + alpha, level);
        Rational mx = std::max(c.c2, c.c3);
        KcnfConstants next;
        next.c1_exponent = c.c1_exponent + level * (c.c2 + c.c3);
        next.c2 = c.c2 + c.c3;
        next.c3 = 8 / (eta * eta) * mx;
        next.c4 = 2 / eta * mx;
        next.eta = eta;
        c = next;
    }
    return c;
}

}  // namespace rlab
