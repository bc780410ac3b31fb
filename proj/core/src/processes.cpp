#include "btbm/processes.hpp"

#include <cmath>
#include <stdexcept>

namespace btbm {

ExcursionDecomposition decompose_excursions(const InnerPath& inner) {
    ExcursionDecomposition dec;
    const auto& b = inner.values;
    const std::size_t m = b.size();
    std::size_t k = 0;
    while (k < m) {
        if (b[k] == 0.0) {
            ++k;
            continue;
        }
        std::size_t start = k;
        while (k + 1 < m && b[k + 1] != 0.0 && ((b[k] > 0.0) == (b[k + 1] > 0.0))) ++k;
        dec.intervals.push_back({start, k});
        ++k;
    }
    return dec;
}

namespace {

void validate(const ProcessVariant& v) {
    if (v.dimension < 1) throw std::invalid_argument("simulate: dimension must be >= 1");
    if (v.kind == VariantKind::k_excursion && v.k < 1)
        throw std::invalid_argument("simulate: k_excursion requires k >= 1");
}

}  // namespace

ClockedSample simulate(const ProcessVariant& variant, const Partition& partition,
                       const ReplicateStreams& streams) {
    validate(variant);
    ClockedSample sample;
    sample.variant = variant;
    sample.partition = partition;
    sample.inner = sample_inner_path(partition, streams);
    sample.excursions = decompose_excursions(sample.inner);

    const std::size_t m = sample.inner.values.size();
    const uint32_t d = variant.dimension;
    sample.values.assign(m * d, variant.start_point);

    // copy index per excursion, drawn in excursion order
    auto& assignment = sample.excursions.copy_assignment;
    assignment.resize(sample.excursions.intervals.size());
    if (variant.kind == VariantKind::simple) {
        for (auto& c : assignment) c = 0;
    } else if (variant.kind == VariantKind::k_excursion) {
        RngStream pick = streams.copy_select();
        for (auto& c : assignment) c = pick.next_below(variant.k);
    } else {
        for (std::size_t e = 0; e < assignment.size(); ++e)
            assignment[e] = static_cast<uint32_t>(e);
    }

    // highest copy index actually used decides how many samplers exist
    uint32_t n_copies = 1;
    for (const auto c : assignment) n_copies = std::max(n_copies, c + 1);

    std::vector<double> batch, got;
    for (uint32_t comp = 0; comp < d; ++comp) {
        std::vector<LevelSampler> samplers;
        samplers.reserve(n_copies);
        for (uint32_t c = 0; c < n_copies; ++c)
            samplers.emplace_back(variant.start_point, streams.outer(c, comp));

        for (std::size_t e = 0; e < sample.excursions.intervals.size(); ++e) {
            const auto [first, last] = sample.excursions.intervals[e];
            batch.clear();
            for (std::size_t k = first; k <= last; ++k)
                batch.push_back(std::fabs(sample.inner.values[k]));
            samplers[assignment[e]].query(batch, got);
            for (std::size_t k = first; k <= last; ++k)
                sample.values[k * d + comp] = got[k - first];
        }
    }
    return sample;
}

TerminalSample simulate_terminal(const ProcessVariant& variant, double t,
                                 const ReplicateStreams& streams) {
    validate(variant);
    if (!(t > 0.0)) throw std::invalid_argument("simulate_terminal: t must be positive");
    RngStream rng = streams.terminal();
    TerminalSample out;
    out.clock = std::fabs(std::sqrt(t) * rng.next_normal());
    out.x.resize(variant.dimension);
    const double sd = std::sqrt(out.clock);
    for (auto& xi : out.x) xi = variant.start_point + sd * rng.next_normal();
    return out;
}

LevelQueryPlan::LevelQueryPlan(std::span<const double> levels) {
    std::vector<std::uint32_t> order(levels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<uint32_t>(i);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return levels[a] < levels[b]; });
    grid_to_unique_.resize(levels.size());
    unique_.reserve(levels.size());
    for (const uint32_t idx : order) {
        if (unique_.empty() || levels[idx] != unique_.back()) unique_.push_back(levels[idx]);
        grid_to_unique_[idx] = static_cast<uint32_t>(unique_.size() - 1);
    }
}

void LevelQueryPlan::resample(double start_value, RngStream& rng,
                              std::vector<double>& grid_values) const {
    std::vector<double> vals(unique_.size());
    double prev_level = 0.0, prev_value = start_value;
    for (std::size_t i = 0; i < unique_.size(); ++i) {
        if (unique_[i] == 0.0) {
            vals[i] = start_value;
            continue;
        }
        vals[i] = prev_value + std::sqrt(unique_[i] - prev_level) * rng.next_normal();
        prev_level = unique_[i];
        prev_value = vals[i];
    }
    grid_values.resize(grid_to_unique_.size());
    for (std::size_t k = 0; k < grid_to_unique_.size(); ++k)
        grid_values[k] = vals[grid_to_unique_[k]];
}

}  // namespace btbm
