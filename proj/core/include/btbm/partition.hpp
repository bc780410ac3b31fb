#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace btbm {

enum class PartitionScheme { uniform, dyadic };

// Ordered time grid 0 = t_0 <= t_1 <= ... <= t_n = t of the horizon [0, t].
struct Partition {
    std::vector<double> times;
    double mesh = 0.0;

    std::size_t steps() const { return times.empty() ? 0 : times.size() - 1; }
    double horizon() const { return times.empty() ? 0.0 : times.back(); }
    double gap(std::size_t k) const { return times[k + 1] - times[k]; }

    static double recompute_mesh(const std::vector<double>& ts) {
        double m = 0.0;
        for (std::size_t k = 1; k < ts.size(); ++k) m = std::max(m, ts[k] - ts[k - 1]);
        return m;
    }
};

Partition make_partition(double t, std::size_t n, PartitionScheme scheme = PartitionScheme::uniform);

}  // namespace btbm
