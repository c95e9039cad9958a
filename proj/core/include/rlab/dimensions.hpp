#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rlab/concepts.hpp"

namespace rlab {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept;
};

// Explicit finite class: an evaluation table over an explicit point list.
// Extensionally equal concepts are merged; the first occurrence is kept.
class FiniteClass {
public:
    FiniteClass(std::vector<BitVector> points, const std::vector<Classifier>& concepts);
    // Abstract points 0..m-1 (e.g. a grid on the line); rows[c] bit p = c(point p).
    FiniteClass(std::size_t num_points, std::vector<Bits> rows);
    static FiniteClass on_cube(const std::vector<Concept>& concepts, int n);
    static FiniteClass on_points(const std::vector<Concept>& concepts, std::vector<BitVector> points);

    std::size_t size() const { return rows_.size(); }
    std::size_t num_points() const { return m_; }
    bool has_points() const { return !points_.empty(); }
    const std::vector<BitVector>& points() const { return points_; }
    const std::vector<Bits>& rows() const { return rows_; }
    // Index in the input concept list of each kept row.
    const std::vector<std::size_t>& origin() const { return origin_; }
    bool value(std::size_t c, std::size_t p) const { return (rows_[c][p / 64] >> (p % 64)) & 1; }
    std::optional<std::size_t> index_of(const BitVector& x) const;

private:
    void dedupe();
    std::size_t m_ = 0;
    std::vector<BitVector> points_;
    std::vector<Bits> rows_;
    std::vector<std::size_t> origin_;
};

using Metric = std::function<double(std::size_t, std::size_t)>;
// Hamming distance between listed hypercube points.
Metric hamming_metric(const FiniteClass& f);

struct DimensionResult {
    int value = 0;
    // Shattered set, or the root path of an optimal tree (point indices).
    std::vector<std::size_t> witness;
    std::uint64_t nodes = 0;
};

struct SearchOptions {
    std::optional<double> rho;
    std::optional<double> tau;
    Metric metric;
    std::uint64_t budget = 200'000'000;
};

// Memoized Littlestone recursion over version spaces given as concept bitsets.
class LittlestoneEngine {
public:
    LittlestoneEngine(const FiniteClass& f, const SearchOptions& opt);
    // Confine tree nodes to points within rho of root (opt.rho must be set).
    void restrict_to_ball(std::size_t root);
    int lit(const Bits& v);
    // Members of v labelling p with b (constant b on the tau-ball of p in precision mode).
    Bits side(const Bits& v, std::size_t p, bool b) const;
    Bits full() const;
    std::uint64_t nodes() const { return nodes_; }

private:
    const FiniteClass& f_;
    SearchOptions opt_;
    Metric d_;
    std::uint64_t nodes_ = 0;
    std::vector<Bits> col1_, col0_;
    std::vector<std::size_t> allowed_;
    std::unordered_map<Bits, int, BitsHash> memo_;
};

bool shatters(const FiniteClass& f, const std::vector<std::size_t>& pts);
// Largest shattered set; with rho, some member x* has every member within rho of it.
DimensionResult vc_dimension(const FiniteClass& f, const SearchOptions& opt = {});
// Littlestone recursion; rho confines nodes to the root's ball, tau restricts each side to
// hypotheses constant on the tau-ball of the node.
DimensionResult littlestone_dimension(const FiniteClass& f, const SearchOptions& opt = {});
std::uint64_t growth_function(const FiniteClass& f, int m, std::uint64_t budget = 50'000'000);

// Rows x -> 1[exists z in B_rho(x): c(z) != h(z)] over {0,1}^n for c in C, h in H (deduplicated).
// C and H must be tabulated on the whole cube in mask order.
FiniteClass robust_loss_class(const FiniteClass& C, const FiniteClass& H, int n, int rho,
                              std::uint64_t budget = 100'000'000);

// Thresholds 1[x >= t] on the grid {j * step : 0 <= j <= B/step}, t at half-steps; metric |x - y|.
struct ThresholdGrid {
    FiniteClass cls;
    std::vector<double> coords;
    Metric metric() const;
};
ThresholdGrid threshold_grid(double B, double step);

}  // namespace rlab
