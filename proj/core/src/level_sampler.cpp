#include "btbm/level_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btbm {

double LevelSampler::insert_at(std::size_t pos, double level) {
    double value;
    if (pos == levels_.size()) {
        const double gap = level - levels_.back();
        value = values_.back() + std::sqrt(gap) * stream_.next_normal();
    } else {
        const double sa = levels_[pos - 1], sc = levels_[pos];
        const double va = values_[pos - 1], vc = values_[pos];
        const double mean = va + (level - sa) / (sc - sa) * (vc - va);
        const double var = (level - sa) * (sc - level) / (sc - sa);
        value = mean + std::sqrt(var) * stream_.next_normal();
    }
    levels_.insert(levels_.begin() + static_cast<std::ptrdiff_t>(pos), level);
    values_.insert(values_.begin() + static_cast<std::ptrdiff_t>(pos), value);
    return value;
}

double LevelSampler::query(double level) {
    if (!(level >= 0.0)) throw std::invalid_argument("LevelSampler: negative or NaN level");
    const auto it = std::lower_bound(levels_.begin(), levels_.end(), level);
    const std::size_t pos = static_cast<std::size_t>(it - levels_.begin());
    if (it != levels_.end() && *it == level) return values_[pos];
    return insert_at(pos, level);
}

void LevelSampler::query(std::span<const double> levels, std::vector<double>& out) {
    out.resize(levels.size());
    // ascending pass over the requested batch; duplicates resolve to the
    // stored value, fresh levels consume normals in sorted order
    std::vector<std::size_t> order(levels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return levels[a] < levels[b]; });
    for (const std::size_t i : order) out[i] = query(levels[i]);
}

}  // namespace btbm
