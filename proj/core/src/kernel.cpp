#include "btbm/kernel.hpp"

#include <cmath>

#include "btbm/rng.hpp"  // normal_cdf

namespace btbm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double sq(double v) { return v * v; }

double distance_sq(const std::vector<double>& x, const std::vector<double>& y) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r2 += sq(x[i] - y[i]);
    return r2;
}

}  // namespace

KernelValue density_full(const KernelQuery& q, const QuadratureConfig& cfg) {
    if (!(q.t > 0.0)) throw std::invalid_argument("density: t must be positive");
    if (q.x.size() != q.y.size() || q.x.empty())
        throw std::invalid_argument("density: x and y must be non-empty and of equal length");
    const double d = static_cast<double>(q.dim());
    const double t = q.t;
    const double r2 = distance_sq(q.x, q.y);
    if (q.dim() >= 2 && r2 == 0.0) throw on_diagonal_divergence();

    const double s_max = cfg.s_max_multiplier * std::sqrt(t);
    const double clock_norm = 1.0 / std::sqrt(kTwoPi * t);

    QuadratureResult res;
    if (cfg.small_s_substitution) {
        // s = u^2: integrand 2 * (2 pi u^2)^{-d/2} e^{-r2/2u^2} e^{-u^4/2t} * 2u
        const double u_max = std::sqrt(s_max);
        auto f = [&](double u) {
            if (u <= 0.0) return 0.0;
            const double s = u * u;
            const double gauss = (r2 > 0.0) ? std::exp(-r2 / (2.0 * s)) : 1.0;
            const double space_norm = std::pow(kTwoPi * s, -0.5 * d);
            return 4.0 * u * space_norm * gauss * std::exp(-sq(s) / (2.0 * t)) * clock_norm;
        };
        res = integrate_adaptive(f, 0.0, u_max, cfg.rel_tol, cfg.abs_tol, cfg.max_intervals);
    } else {
        auto f = [&](double s) {
            if (s <= 0.0) return 0.0;
            const double gauss = (r2 > 0.0) ? std::exp(-r2 / (2.0 * s)) : 1.0;
            const double space_norm = std::pow(kTwoPi * s, -0.5 * d);
            return 2.0 * space_norm * gauss * std::exp(-sq(s) / (2.0 * t)) * clock_norm;
        };
        res = integrate_adaptive(f, 0.0, s_max, cfg.rel_tol, cfg.abs_tol, cfg.max_intervals);
    }
    return {res.value, res.error_bound};
}

double density(const KernelQuery& q, const QuadratureConfig& cfg) { return density_full(q, cfg).value; }

double density(double t, double x, double y, const QuadratureConfig& cfg) {
    KernelQuery q;
    q.t = t;
    q.x = {x};
    q.y = {y};
    return density_full(q, cfg).value;
}

double density_shifted(double t, double z, double mu, const QuadratureConfig& cfg) {
    return density(t, mu * t, z, cfg);
}

double cdf(double t, double z, double mu, const QuadratureConfig& cfg) {
    if (!(t > 0.0)) throw std::invalid_argument("cdf: t must be positive");
    const double w = z - mu * t;
    const double u_max = std::sqrt(cfg.s_max_multiplier * std::sqrt(t));
    const double clock_norm = 1.0 / std::sqrt(kTwoPi * t);
    // s = u^2 again: 2 * Phi(w/sqrt(s)) halfnormal(s) ds -> 4 u Phi(w/u) e^{-u^4/2t} norm
    auto f = [&](double u) {
        if (u <= 0.0) return 0.0;
        return 4.0 * u * normal_cdf(w / u) * std::exp(-sq(u * u) / (2.0 * t)) * clock_norm;
    };
    const auto res = integrate_adaptive(f, 0.0, u_max, cfg.rel_tol, cfg.abs_tol, cfg.max_intervals);
    return std::min(1.0, std::max(0.0, res.value));
}

double moment(double t, int order, bool absolute) {
    if (!(t > 0.0)) throw std::invalid_argument("moment: t must be positive");
    if (order < 1 || order > 4) throw std::invalid_argument("moment: order must be in {1,2,3,4}");
    if (!absolute && (order % 2 == 1)) return 0.0;
    const double p = static_cast<double>(order);
    return std::pow(2.0, 0.75 * p) * std::tgamma(0.5 * (p + 1.0)) * std::tgamma(0.25 * (p + 2.0)) /
           3.141592653589793238462643383280 * std::pow(t, 0.25 * p);
}

CdfTable::CdfTable(double t, double mu, const QuadratureConfig& cfg, std::size_t points)
    : t_(t), mu_(mu) {
    if (points < 2) throw std::invalid_argument("CdfTable: need at least 2 points");
    // half-normal clock keeps essentially all mass below 8 sqrt(t); the value
    // scale is sqrt(clock) ~ t^{1/4}, padded generously
    const double span = 10.0 * std::pow(t, 0.25) + 2.0 * std::sqrt(t);
    lo_ = mu * t - span;
    hi_ = mu * t + span;
    step_ = (hi_ - lo_) / static_cast<double>(points - 1);
    values_.resize(points);
    for (std::size_t i = 0; i < points; ++i)
        values_[i] = cdf(t, lo_ + step_ * static_cast<double>(i), mu, cfg);
}

double CdfTable::operator()(double z) const {
    if (z <= lo_) return values_.front();
    if (z >= hi_) return values_.back();
    const double pos = (z - lo_) / step_;
    const std::size_t i = std::min(values_.size() - 2, static_cast<std::size_t>(pos));
    const double frac = pos - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

}  // namespace btbm
