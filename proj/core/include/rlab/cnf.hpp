#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlab/concepts.hpp"
#include "rlab/distributions.hpp"

namespace rlab {

// Signed literals (+i / -i), sorted by (variable, positive first), no duplicates.
using Clause = std::vector<int>;

class CnfFormula {
public:
    CnfFormula() = default;
    // Tautological clauses are dropped and recorded in dropped_tautologies().
    CnfFormula(int n, std::vector<Clause> clauses);

    int n() const { return n_; }
    int width() const { return width_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }
    int dropped_tautologies() const { return dropped_; }
    bool has_empty_clause() const;
    bool satisfied(const BitVector& x) const;
    bool satisfied_mask(std::uint64_t x) const;

    // One clause per line, signed integers, 0-terminated.
    std::string to_dimacs() const;
    static CnfFormula from_dimacs(int n, const std::string& text);

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    int n_ = 0;
    int width_ = 0;
    int dropped_ = 0;
    std::vector<Clause> clauses_;
};

Clause normalize_clause(Clause c);
bool clause_less(const Clause& a, const Clause& b);

// Indicator table over masks of {x : exists z in B_rho(x), z |= phi} (n <= 20).
std::vector<char> sat_table(const CnfFormula& phi, int rho);
std::vector<BitVector> sat_set(const CnfFormula& phi, int rho);

CnfFormula resolution_closure(const CnfFormula& phi, std::size_t budget = 100'000);

// Minimum-cardinality hitting set of literals, by branch and bound.
std::vector<int> minimal_cover(const CnfFormula& phi, std::size_t budget = 64);

// Greedy in clause order (size, then lexicographic).
std::vector<Clause> variable_disjoint_matching(const CnfFormula& phi);
std::vector<Clause> literal_disjoint_matching(const CnfFormula& phi);

// CNF for "x activates node i of c and node j of h" (1-based), optionally resolution-closed.
CnfFormula discrepancy_formula(const Concept& c, const Concept& h, int i, int j, bool close);

// Coordinate j is the truth of clause j of M under x; M must be variable-disjoint.
BitVector matching_embed(const BitVector& x, const std::vector<Clause>& M);
std::uint64_t matching_embed_mask(std::uint64_t x, const std::vector<Clause>& M);

struct KcnfConstants {
    // C1 >= 2^(-c1_exponent).
    Rational c1_exponent;
    Rational c2;
    Rational c3;
    Rational c4;
    Rational eta;
};

// Base case for k = 1; printed closed forms for k >= 2.
KcnfConstants kcnf_constants(int k, const Rational& alpha);
// The inductive-step recurrence with max{} and eta = (1+alpha)^-k at each level; c1_exponent exact.
KcnfConstants kcnf_recurrence(int k, const Rational& alpha);

}  // namespace rlab
