#pragma once

#include <cstdint>
#include <vector>

#include "btbm/partition.hpp"
#include "btbm/rng.hpp"

namespace btbm {

// Discretized inner Brownian motion B on a partition, B(0) = 0.
struct InnerPath {
    Partition partition;
    std::vector<double> values;
    // reproducibility token: (seed, replicate) that generated the path
    uint64_t seed_tag_seed = 0;
    uint64_t seed_tag_replicate = 0;

    std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
};

// Independent Gaussian increments, variance = grid gap.
InnerPath sample_inner_path(const Partition& partition, const ReplicateStreams& streams);

// One dyadic refinement: midpoints of every gap are filled in from the
// Brownian-bridge conditional N((B_l+B_r)/2, gap/4).  `level` selects the
// refinement stream so repeated refinement is reproducible no matter how the
// caller interleaves calls.
InnerPath refine_dyadic(const InnerPath& path, uint32_t level, const ReplicateStreams& streams);

}  // namespace btbm
