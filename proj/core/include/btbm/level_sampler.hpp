#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "btbm/rng.hpp"

namespace btbm {

// Lazily sampled outer Brownian motion X on clock levels s >= 0, X(0) = x.
//
// Querying a level already sampled returns the stored value bit-identically.
// A new level past the largest known one is drawn by free Gaussian extension
// (variance = gap); a new level between known neighbours is drawn from the
// Brownian-bridge conditional
//   mean = linear interpolation, var = (s-s_a)(s_c-s)/(s_c-s_a).
// Batches are deduplicated and generated in ascending level order, so the
// stream consumption is a deterministic function of the query sequence.
class LevelSampler {
  public:
    LevelSampler(double start_value, RngStream stream)
        : levels_{0.0}, values_{start_value}, stream_(stream) {}

    double query(double level);
    void query(std::span<const double> levels, std::vector<double>& out);
    std::vector<double> query(std::span<const double> levels) {
        std::vector<double> out;
        query(levels, out);
        return out;
    }

    std::size_t known_levels() const { return levels_.size(); }
    double start_value() const { return values_.front(); }

  private:
    double insert_at(std::size_t pos, double level);

    std::vector<double> levels_;  // ascending, levels_[0] == 0
    std::vector<double> values_;
    RngStream stream_;
};

}  // namespace btbm
