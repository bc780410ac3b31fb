#include "btbm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace btbm {

double kolmogorov_sf(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) return 1.0;
    double s = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        s += (k % 2 == 1) ? term : -term;
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * s, 0.0, 1.0);
}

namespace {

double stephens_lambda(double d, double n_eff) {
    const double rn = std::sqrt(n_eff);
    return d * (rn + 0.12 + 0.11 / rn);
}

}  // namespace

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.size() < 100) throw std::invalid_argument("ks_test: need at least 100 samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, std::fabs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    }
    return {d, kolmogorov_sf(stephens_lambda(d, n)), n};
}

KsResult ks_test_weighted(std::span<const double> samples, std::span<const double> weights,
                          const std::function<double(double)>& cdf) {
    if (samples.size() != weights.size()) throw std::invalid_argument("ks_test_weighted: size mismatch");
    if (samples.size() < 100) throw std::invalid_argument("ks_test_weighted: need at least 100 samples");
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });
    double wsum = 0.0, wsq = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0)) throw std::invalid_argument("ks_test_weighted: negative weight");
        wsum += weights[i];
        wsq += weights[i] * weights[i];
    }
    if (!(wsum > 0.0)) throw std::invalid_argument("ks_test_weighted: zero total weight");
    double d = 0.0, cw = 0.0;
    for (const std::size_t i : order) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::fabs(cw / wsum - f));
        cw += weights[i];
        d = std::max(d, std::fabs(cw / wsum - f));
    }
    const double n_eff = wsum * wsum / wsq;
    return {d, kolmogorov_sf(stephens_lambda(d, n_eff)), n_eff};
}

KsResult ks_test_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 100 || b.size() < 100)
        throw std::invalid_argument("ks_test_two_sample: need at least 100 samples per side");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        const double v = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= v) ++i;
        while (j < sb.size() && sb[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double n_eff = na * nb / (na + nb);
    return {d, kolmogorov_sf(stephens_lambda(d, n_eff)), n_eff};
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty");
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    double hi = values[mid];
    if (values.size() % 2 == 1) return hi;
    const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

MeanSe mean_se(std::span<const double> values) {
    MeanSe out;
    out.n = values.size();
    if (out.n == 0) return out;
    double acc = 0.0, comp = 0.0;
    for (const double v : values) {
        const double y = v - comp;
        const double s = acc + y;
        comp = (s - acc) - y;
        acc = s;
    }
    out.mean = acc / static_cast<double>(out.n);
    if (out.n < 2) return out;
    double ss = 0.0;
    for (const double v : values) ss += (v - out.mean) * (v - out.mean);
    out.se = std::sqrt(ss / static_cast<double>(out.n - 1) / static_cast<double>(out.n));
    return out;
}

MeanSe weighted_mean_se(std::span<const double> values, std::span<const double> weights) {
    if (values.size() != weights.size()) throw std::invalid_argument("weighted_mean_se: size mismatch");
    MeanSe out;
    out.n = values.size();
    double wsum = 0.0;
    for (const double w : weights) wsum += w;
    if (!(wsum > 0.0)) throw std::invalid_argument("weighted_mean_se: zero total weight");
    double num = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) num += weights[i] * values[i];
    out.mean = num / wsum;
    double ss = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double r = weights[i] * (values[i] - out.mean);
        ss += r * r;
    }
    out.se = std::sqrt(ss) / wsum;
    return out;
}

}  // namespace btbm
