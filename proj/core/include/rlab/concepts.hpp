#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rlab/hypercube.hpp"

namespace rlab {

// Conjunction of literals over x_1..x_n. Empty term is `true`.
struct Term {
    BitVector pos;
    BitVector neg;

    static Term from_literals(int n, const std::vector<int>& signed_literals);
    static Term top(int n) { return Term{BitVector(n), BitVector(n)}; }
    bool satisfied(const BitVector& x) const;
    // Number of literals x falsifies: the Hamming distance from x to the satisfying set.
    int unsatisfied(const BitVector& x) const;
    int size() const { return pos.popcount() + neg.popcount(); }
    bool contradictory() const { return pos.intersects(neg); }
    bool empty() const { return size() == 0; }
    // Sorted by variable, positive before negative: +i, -i, +j, ...
    std::vector<int> literals() const;
    friend bool operator==(const Term&, const Term&) = default;
};

struct MonotoneConjunction {
    BitVector indices;
    friend bool operator==(const MonotoneConjunction&, const MonotoneConjunction&) = default;
};
struct Conjunction {
    Term term;
    friend bool operator==(const Conjunction&, const Conjunction&) = default;
};
struct Parity {
    BitVector indices;
    friend bool operator==(const Parity&, const Parity&) = default;
};
struct Majority {
    BitVector indices;
    friend bool operator==(const Majority&, const Majority&) = default;
};
struct DecisionList {
    struct Node {
        Term term;
        bool value;
        friend bool operator==(const Node&, const Node&) = default;
    };
    std::vector<Node> nodes;
    int k = 1;
    friend bool operator==(const DecisionList&, const DecisionList&) = default;
};
struct DecisionTree {
    // var == 0 marks a leaf. Left child (lo) is taken when x_var = 0. Node 0 is the root.
    struct Node {
        int var = 0;
        int lo = -1;
        int hi = -1;
        bool label = false;
        friend bool operator==(const Node&, const Node&) = default;
    };
    std::vector<Node> nodes;
    friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};
// 1[w.x + b >= 0], integer weights with sum |w_i| + |b| <= W.
struct LtfBool {
    std::vector<long long> w;
    long long b = 0;
    long long W = 0;
    friend bool operator==(const LtfBool&, const LtfBool&) = default;
};
struct Singleton {
    BitVector point;
    friend bool operator==(const Singleton&, const Singleton&) = default;
};
struct Dictator {
    int index = 1;
    bool positive = true;
    friend bool operator==(const Dictator&, const Dictator&) = default;
};
struct Constant {
    bool value = false;
    friend bool operator==(const Constant&, const Constant&) = default;
};

class Concept {
public:
    using Variant = std::variant<MonotoneConjunction, Conjunction, Parity, Majority, DecisionList, DecisionTree,
                                 LtfBool, Singleton, Dictator, Constant>;

    static Concept mon_conj(int n, const std::vector<int>& indices);
    static Concept conj(int n, const std::vector<int>& signed_literals);
    static Concept conj(const Term& t);
    static Concept parity(int n, const std::vector<int>& indices);
    static Concept majority(int n, const std::vector<int>& indices);
    static Concept decision_list(int n, std::vector<DecisionList::Node> nodes, int k);
    static Concept decision_tree(int n, std::vector<DecisionTree::Node> nodes);
    static Concept ltf(std::vector<long long> w, long long b, long long W);
    static Concept singleton(const BitVector& x);
    static Concept dictator(int n, int index, bool positive = true);
    static Concept constant(int n, bool value);

    int n() const { return n_; }
    const Variant& variant() const { return v_; }
    std::string kind() const;
    bool evaluate(const BitVector& x) const;
    bool operator()(const BitVector& x) const { return evaluate(x); }
    bool evaluate_mask(std::uint64_t x) const { return evaluate(BitVector::from_mask(n_, x)); }
    // Literal / node count.
    int size() const;
    std::string to_string() const;

    friend bool operator==(const Concept&, const Concept&) = default;

private:
    Concept(int n, Variant v) : n_(n), v_(std::move(v)) {}
    int n_ = 0;
    Variant v_;
};

// Type-erased predicate on the hypercube; every Concept converts to one.
using Classifier = std::function<bool(const BitVector&)>;

struct ClassSpec {
    std::string name;
    int k = 1;
    long long W = 0;
};

std::uint64_t class_size(const ClassSpec& spec, int n);
// Every member exactly once in a deterministic order; throws BudgetExceeded with the count.
std::vector<Concept> enumerate_class(const ClassSpec& spec, int n, std::uint64_t budget = 2'000'000);

double influence(const Concept& c, int i);
// 2^-n sum_x f(x) x_i with 0 -> +1, 1 -> -1 on inputs and outputs.
double fourier_singleton(const Concept& c, int i);

// Coordinates of the k-clause embedding: every term of 1..k literals on distinct variables,
// ordered by length then lexicographically on (variable, positive-first) keys.
std::vector<Term> embedding_terms(int n, int k);
BitVector dl_embed(const BitVector& x, int k);
// A k-DL over {0,1}^n mapped to the 1-DL over embedding coordinates.
Concept dl_to_embedded(const Concept& c, int k);

// 1-based activated node of a decision list (or leaf depth of a tree).
int activated_level(const Concept& c, const BitVector& x);
bool consistent_to_depth(const Concept& c, const Concept& h, int d);

// Checks conditions (i)-(ii): no repeated term and every node reachable; final term is true.
bool is_minimal_dl(const Concept& c);
// Minimal form of an arbitrary list: drops unreachable nodes, truncates at the first node that always fires.
Concept make_minimal_dl(int n, std::vector<DecisionList::Node> nodes, int k);

}  // namespace rlab
