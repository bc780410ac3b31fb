#include "btbm/pathstats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace btbm {

VariationEstimate p_variation(std::span<const double> path_values, const Partition& partition,
                              double p) {
    if (path_values.size() != partition.times.size())
        throw std::invalid_argument("p_variation: path/partition length mismatch");
    if (!(p > 0.0)) throw std::invalid_argument("p_variation: p must be positive");
    double acc = 0.0, comp = 0.0;
    for (std::size_t k = 1; k < path_values.size(); ++k) {
        const double term = std::pow(std::fabs(path_values[k] - path_values[k - 1]), p);
        const double y = term - comp;
        const double s = acc + y;
        comp = (s - acc) - y;
        acc = s;
    }
    return {p, acc, partition.mesh, 0};
}

double conditional_fourth_variation(const InnerPath& inner) {
    double acc = 0.0;
    for (std::size_t k = 1; k < inner.values.size(); ++k) {
        const double d = std::fabs(inner.values[k]) - std::fabs(inner.values[k - 1]);
        acc += d * d;
    }
    return 3.0 * acc;
}

double LocalTimeProfile::integrate(bool squared) const {
    if (levels.size() < 2) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        const double fa = squared ? values[i - 1] * values[i - 1] : values[i - 1];
        const double fb = squared ? values[i] * values[i] : values[i];
        acc += 0.5 * (fa + fb) * (levels[i] - levels[i - 1]);
    }
    return acc;
}

LocalTimeProfile local_time(const InnerPath& inner, std::span<const double> levels,
                            double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("local_time: epsilon must be positive");
    const std::size_t n = inner.steps();
    // occupied (|B(t_{k-1})|, gap) pairs sorted by level; the band count per
    // level is then two binary searches
    std::vector<std::pair<double, double>> occ(n);
    for (std::size_t k = 0; k < n; ++k)
        occ[k] = {std::fabs(inner.values[k]), inner.partition.gap(k)};
    std::sort(occ.begin(), occ.end());
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + occ[k].second;

    LocalTimeProfile prof;
    prof.levels.assign(levels.begin(), levels.end());
    prof.values.resize(levels.size());
    prof.epsilon = epsilon;
    prof.t = inner.partition.horizon();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double a = levels[i];
        // strict band a - eps < |B| < a + eps
        const auto lo = std::upper_bound(occ.begin(), occ.end(),
                                         std::pair<double, double>(a - epsilon,
                                                                   std::numeric_limits<double>::max()));
        const auto hi = std::lower_bound(occ.begin(), occ.end(),
                                         std::pair<double, double>(a + epsilon,
                                                                   std::numeric_limits<double>::lowest()));
        const auto li = static_cast<std::size_t>(lo - occ.begin());
        const auto hiI = static_cast<std::size_t>(hi - occ.begin());
        prof.values[i] = (prefix[hiI] - prefix[li]) / (2.0 * epsilon);
    }
    return prof;
}

namespace {

double auto_epsilon(const InnerPath& inner, double min_epsilon) {
    return std::max(std::sqrt(inner.partition.mesh), min_epsilon);
}

std::vector<double> auto_levels(const InnerPath& inner, double eps) {
    double mx = 0.0;
    for (const double v : inner.values) mx = std::max(mx, std::fabs(v));
    std::vector<double> levels;
    for (double a = 0.0; a <= mx + 3.0 * eps; a += eps) levels.push_back(a);
    return levels;
}

}  // namespace

LocalTimeProfile local_time_auto(const InnerPath& inner, double min_epsilon) {
    const double eps = auto_epsilon(inner, min_epsilon);
    return local_time(inner, auto_levels(inner, eps), eps);
}

double occupation_measure(const InnerPath& inner, double a1, double a2) {
    if (a1 > a2) throw std::invalid_argument("occupation_measure: a1 > a2");
    double acc = 0.0;
    for (std::size_t k = 0; k < inner.steps(); ++k) {
        const double v = std::fabs(inner.values[k]);
        if (v >= a1 && v <= a2) acc += inner.partition.gap(k);
    }
    return acc;
}

namespace {

void level_intervals(const InnerPath& inner, std::vector<double>& lo, std::vector<double>& hi,
                     std::vector<double>& delta) {
    const std::size_t n = inner.steps();
    lo.resize(n);
    hi.resize(n);
    delta.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = std::fabs(inner.values[k]);
        const double b = std::fabs(inner.values[k + 1]);
        lo[k] = std::min(a, b);
        hi[k] = std::max(a, b);
        delta[k] = hi[k] - lo[k];
    }
}

}  // namespace

double weighted_pair_overlap_sum(std::span<const double> lo, std::span<const double> hi,
                                 std::span<const double> w) {
    const std::size_t n = lo.size();
    // pairs are disjoint iff one interval lies strictly left of the other:
    // sum over all ordered pairs minus twice the strictly-left weight sums
    std::vector<std::size_t> by_hi(n);
    std::iota(by_hi.begin(), by_hi.end(), std::size_t{0});
    std::sort(by_hi.begin(), by_hi.end(), [&](std::size_t a, std::size_t b) { return hi[a] < hi[b]; });
    std::vector<double> his(n), pref(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        his[i] = hi[by_hi[i]];
        pref[i + 1] = pref[i] + w[by_hi[i]];
    }
    double total_w = 0.0;
    for (std::size_t i = 0; i < n; ++i) total_w += w[i];
    double disjoint = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = std::lower_bound(his.begin(), his.end(), lo[i]);  // hi_j < lo_i strict
        disjoint += w[i] * pref[static_cast<std::size_t>(it - his.begin())];
    }
    return total_w * total_w - 2.0 * disjoint;
}

double weighted_level_overlap_integral(std::span<const double> lo, std::span<const double> hi,
                                       std::span<const double> w) {
    const std::size_t n = lo.size();
    // sweep the level-line arrangement; f(a) = sum of w over active intervals
    // is piecewise constant between endpoint events
    std::vector<std::pair<double, double>> events;
    events.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 0.0 && lo[i] == hi[i]) continue;
        events.emplace_back(lo[i], w[i]);
        events.emplace_back(hi[i], -w[i]);
    }
    std::sort(events.begin(), events.end());
    double acc = 0.0, f = 0.0;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        f += events[i].second;
        const double seg = events[i + 1].first - events[i].first;
        if (seg > 0.0) acc += f * f * seg;
    }
    return acc;
}

OverlapSum overlap_sum(const InnerPath& inner) {
    std::vector<double> lo, hi, delta;
    level_intervals(inner, lo, hi, delta);
    OverlapSum out;
    out.n_intervals = delta.size();
    if (delta.empty()) return out;
    out.delta_min = *std::min_element(delta.begin(), delta.end());
    out.delta_max = *std::max_element(delta.begin(), delta.end());
    for (const double d : delta) {
        out.delta_sum += d;
        out.delta_sum_sq += d * d;
    }
    out.pair_sum = weighted_pair_overlap_sum(lo, hi, delta);
    out.level_integral = weighted_level_overlap_integral(lo, hi, delta);
    return out;
}

double self_intersection(const InnerPath& inner, std::span<const double> levels, double epsilon) {
    return local_time(inner, levels, epsilon).integrate(true);
}

double self_intersection_auto(const InnerPath& inner) {
    return local_time_auto(inner).integrate(true);
}

}  // namespace btbm
