#include "btbm/partition.hpp"

#include <algorithm>
#include <cmath>

namespace btbm {

Partition make_partition(double t, std::size_t n, PartitionScheme scheme) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("make_partition: t must be positive");
    if (n < 1) throw std::invalid_argument("make_partition: n must be >= 1");

    std::size_t steps = n;
    if (scheme == PartitionScheme::dyadic) {
        // round n up to the next power of two
        steps = 1;
        while (steps < n) steps <<= 1;
    }

    Partition p;
    p.times.resize(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        p.times[k] = t * (static_cast<double>(k) / static_cast<double>(steps));
    p.times.front() = 0.0;
    p.times.back() = t;
    p.mesh = Partition::recompute_mesh(p.times);
    return p;
}

}  // namespace btbm
