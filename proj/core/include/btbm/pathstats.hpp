#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "btbm/inner_path.hpp"
#include "btbm/partition.hpp"

namespace btbm {

// Pathwise estimators over a partition: p-th variation, the closed-form
// conditional fourth variation, reflected-path local time and occupation
// measure, and the two level-overlap functionals of the increments of |B|.

struct VariationEstimate {
    double p = 0.0;
    double value = 0.0;
    double partition_mesh = 0.0;
    uint64_t path_id = 0;
};

VariationEstimate p_variation(std::span<const double> path_values, const Partition& partition,
                              double p);

// 3 * sum_k (|B(t_k)| - |B(t_{k-1})|)^2: the conditional expectation of the
// fourth variation of the outer process given the inner path.
double conditional_fourth_variation(const InnerPath& inner);

struct LocalTimeProfile {
    std::vector<double> levels;  // ascending, spacing epsilon, starting at 0
    std::vector<double> values;  // Lhat_t^a, left-endpoint band estimator
    double epsilon = 0.0;
    double t = 0.0;

    // trapezoidal integral of a function of the profile over the level grid
    double integrate(bool squared = false) const;
};

// (1/2eps) sum_k gap_k 1{a - eps < |B(t_{k-1})| < a + eps} per level a.
LocalTimeProfile local_time(const InnerPath& inner, std::span<const double> levels, double epsilon);

// Convenience: uniform level grid 0 .. max|B| + 3 eps with spacing eps,
// eps = max(sqrt(mesh), requested minimum).
LocalTimeProfile local_time_auto(const InnerPath& inner, double min_epsilon = 0.0);

// sum_k gap_k 1{|B(t_{k-1})| in [a1, a2]} (closed interval, left endpoint)
double occupation_measure(const InnerPath& inner, double a1, double a2);

// Level intervals I_k = [min, max] of (|B(t_{k-1})|, |B(t_k)|), with
// delta_k = |I_k| their lengths.  Two exact functionals of the arrangement:
//
//   pair_sum       = sum_{i,j} delta_i delta_j 1{I_i cap I_j != empty}
//   level_integral = int_0^inf (sum_i 1{a in I_i} delta_i)^2 da
//
// pair_sum counts overlapping pairs (diagonal included, so it is always
// >= sum delta_k^2); it grows like sqrt(n) under mesh refinement.  The
// level_integral is the functional that converges to the self-intersection
// measure int (L_t^a)^2 da.  Both have O(n^2) reference implementations in
// the test suite.
struct OverlapSum {
    double pair_sum = 0.0;
    double level_integral = 0.0;
    std::size_t n_intervals = 0;
    double delta_min = 0.0, delta_max = 0.0, delta_sum = 0.0, delta_sum_sq = 0.0;

    double value() const { return pair_sum; }
};

OverlapSum overlap_sum(const InnerPath& inner);

// Same functionals with per-interval weights w_k in place of delta_k
// (used for the conditional-variance cross-term bound with w_k = delta_k^2).
double weighted_pair_overlap_sum(std::span<const double> lo, std::span<const double> hi,
                                 std::span<const double> weights);
double weighted_level_overlap_integral(std::span<const double> lo, std::span<const double> hi,
                                       std::span<const double> weights);

// Trapezoidal integral of Lhat^2 over the level grid.
double self_intersection(const InnerPath& inner, std::span<const double> levels, double epsilon);
double self_intersection_auto(const InnerPath& inner);

}  // namespace btbm
