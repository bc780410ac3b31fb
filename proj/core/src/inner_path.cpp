#include "btbm/inner_path.hpp"

#include <cmath>

namespace btbm {

InnerPath sample_inner_path(const Partition& partition, const ReplicateStreams& streams) {
    if (partition.times.size() < 2) throw std::invalid_argument("sample_inner_path: empty partition");
    InnerPath path;
    path.partition = partition;
    path.values.resize(partition.times.size());
    path.values[0] = 0.0;
    RngStream rng = streams.inner();
    for (std::size_t k = 1; k < partition.times.size(); ++k) {
        const double gap = partition.times[k] - partition.times[k - 1];
        path.values[k] = path.values[k - 1] + std::sqrt(gap) * rng.next_normal();
    }
    path.seed_tag_seed = streams.seed;
    path.seed_tag_replicate = streams.replicate;
    return path;
}

InnerPath refine_dyadic(const InnerPath& path, uint32_t level, const ReplicateStreams& streams) {
    const std::size_t n = path.steps();
    if (n == 0) throw std::invalid_argument("refine_dyadic: empty path");
    InnerPath out;
    out.partition.times.resize(2 * n + 1);
    out.values.resize(2 * n + 1);
    RngStream rng = streams.get(StreamRole::aux(1000u + level));
    for (std::size_t k = 0; k < n; ++k) {
        const double tl = path.partition.times[k], tr = path.partition.times[k + 1];
        const double bl = path.values[k], br = path.values[k + 1];
        out.partition.times[2 * k] = tl;
        out.values[2 * k] = bl;
        out.partition.times[2 * k + 1] = 0.5 * (tl + tr);
        out.values[2 * k + 1] = 0.5 * (bl + br) + std::sqrt(0.25 * (tr - tl)) * rng.next_normal();
    }
    out.partition.times.back() = path.partition.times.back();
    out.values.back() = path.values.back();
    out.partition.mesh = Partition::recompute_mesh(out.partition.times);
    out.seed_tag_seed = path.seed_tag_seed;
    out.seed_tag_replicate = path.seed_tag_replicate;
    return out;
}

}  // namespace btbm
