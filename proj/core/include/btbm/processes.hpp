#pragma once

#include <cstdint>
#include <vector>

#include "btbm/inner_path.hpp"
#include "btbm/level_sampler.hpp"
#include "btbm/partition.hpp"
#include "btbm/rng.hpp"

namespace btbm {

// Process family sharing one inner clock |B| but differing in how outer
// copies are assigned to excursions of |B|:
//   simple      - a single outer motion serves every level
//   k_excursion - one of k independent copies, chosen uniformly per excursion
//                 (k = 1 is the simple process, k = 2 the iterated one)
//   inf_excursion - a fresh independent copy on every excursion
enum class VariantKind { simple, k_excursion, inf_excursion };

struct ProcessVariant {
    VariantKind kind = VariantKind::simple;
    uint32_t k = 1;          // copies, k_excursion only
    double start_point = 0.0;
    uint32_t dimension = 1;

    static ProcessVariant simple(double x = 0.0, uint32_t d = 1) {
        return {VariantKind::simple, 1, x, d};
    }
    static ProcessVariant k_excursion(uint32_t k, double x = 0.0, uint32_t d = 1) {
        return {VariantKind::k_excursion, k, x, d};
    }
    static ProcessVariant inf_excursion(double x = 0.0, uint32_t d = 1) {
        return {VariantKind::inf_excursion, 0, x, d};
    }
};

// Maximal runs of grid indices with |B(t_k)| > 0.  A sign change of B between
// adjacent grid points with both values nonzero also ends a run, since |B|
// must have touched 0 in between.
struct ExcursionDecomposition {
    struct Interval {
        std::size_t first;  // inclusive grid index range
        std::size_t last;
    };
    std::vector<Interval> intervals;
    std::vector<uint32_t> copy_assignment;  // parallel to intervals, filled by simulate
};

ExcursionDecomposition decompose_excursions(const InnerPath& inner);

// Joint realization of the process on the inner path's grid.  values is
// row-major (grid index, component); grid points with |B| = 0 hold the start
// point exactly.
struct ClockedSample {
    Partition partition;
    InnerPath inner;
    std::vector<double> values;  // size (n+1) * dimension
    ProcessVariant variant;
    ExcursionDecomposition excursions;

    double value(std::size_t k, uint32_t component = 0) const {
        return values[k * variant.dimension + component];
    }
};

ClockedSample simulate(const ProcessVariant& variant, const Partition& partition,
                       const ReplicateStreams& streams);

// Exact draw of (X_B(t), |B(t)|): the terminal clock is half-normal and the
// terminal value, conditionally on the clock, is Gaussian with that variance.
// The one-time marginal is the same for every variant, so no grid is needed.
struct TerminalSample {
    std::vector<double> x;  // one per component
    double clock = 0.0;
};

TerminalSample simulate_terminal(const ProcessVariant& variant, double t,
                                 const ReplicateStreams& streams);

// Precomputed sort/dedup of a fixed clock-level multiset, for studies that
// hold the inner path fixed and redraw the outer motion many times.  Each
// resample walks the unique ascending levels with sequential Gaussian
// increments and scatters values back into grid order; levels equal to 0
// yield the start point exactly.
class LevelQueryPlan {
  public:
    explicit LevelQueryPlan(std::span<const double> levels);
    void resample(double start_value, RngStream& rng, std::vector<double>& grid_values) const;
    std::size_t unique_levels() const { return unique_.size(); }

  private:
    std::vector<double> unique_;        // ascending, possibly starting at 0
    std::vector<uint32_t> grid_to_unique_;
};

}  // namespace btbm
