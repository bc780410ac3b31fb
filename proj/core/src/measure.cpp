#include "btbm/measure.hpp"

#include <algorithm>
#include <cmath>

#include "btbm/processes.hpp"
#include "btbm/rng.hpp"

namespace btbm {

double rn_weight(double mu, double t, double x_value, double clock_value) {
    if (clock_value < 0.0 || std::isnan(clock_value))
        throw std::invalid_argument("rn_weight: negative clock value");
    if (mu == 0.0) return 1.0;
    if (clock_value == 0.0) throw degenerate_clock_error();
    return std::exp(t / clock_value * (mu * x_value - 0.5 * mu * mu * t));
}

double rn_weight_quartic_form(double mu, double t, double x_value, double clock_value,
                              double quartic_variation) {
    if (clock_value < 0.0 || std::isnan(clock_value))
        throw std::invalid_argument("rn_weight: negative clock value");
    if (mu == 0.0) return 1.0;
    if (clock_value == 0.0) throw degenerate_clock_error();
    return std::exp(t / clock_value * (mu * x_value - mu * mu * quartic_variation / 6.0));
}

double rn_weight_ddim(std::span<const double> mu, double t, std::span<const double> x,
                      double clock_value) {
    if (mu.size() != x.size() || mu.empty())
        throw std::invalid_argument("rn_weight_ddim: dimension mismatch");
    if (clock_value < 0.0 || std::isnan(clock_value))
        throw std::invalid_argument("rn_weight_ddim: negative clock value");
    bool zero_drift = true;
    double dot = 0.0, msq = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        dot += mu[i] * x[i];
        msq += mu[i] * mu[i];
        if (mu[i] != 0.0) zero_drift = false;
    }
    if (zero_drift) return 1.0;
    if (clock_value == 0.0) throw degenerate_clock_error();
    return std::exp(t / clock_value * (dot - 0.5 * msq * t));
}

double ComVerifyConfig::effective_clock_floor() const {
    return clock_floor >= 0.0 ? clock_floor : 1e-4 * std::sqrt(t);
}

namespace {

// quantile of the half-normal clock |B(t)|
double clock_quantile(double t, double p) {
    return std::sqrt(t) * detail::inverse_normal_cdf(0.5 + 0.5 * p);
}

double clock_cdf(double t, double s) { return 2.0 * (normal_cdf(s / std::sqrt(t)) - 0.5); }

// Stratum clock values for the weight-mean test.  The conditional weight is
// lognormal with sigma^2 = mu^2 t^2 / s, so strata are placed above the clock
// value where sigma^2 = 6 to keep every per-stratum estimator's Monte Carlo
// error resolvable at the configured draw count.
std::vector<double> default_strata(const ComVerifyConfig& cfg) {
    const double var_cap = 6.0;
    double floor = cfg.effective_clock_floor();
    if (cfg.mu != 0.0)
        floor = std::max(floor, cfg.mu * cfg.mu * cfg.t * cfg.t / var_cap);
    const double p_floor = clock_cdf(cfg.t, floor);
    std::vector<double> out(cfg.n_strata);
    for (std::size_t j = 0; j < cfg.n_strata; ++j) {
        const double q = (static_cast<double>(j) + 0.5) / static_cast<double>(cfg.n_strata);
        out[j] = clock_quantile(cfg.t, p_floor + q * (1.0 - p_floor));
    }
    return out;
}

}  // namespace

ComReport conditional_weight_mean_test(const ComVerifyConfig& cfg) {
    if (cfg.n_strata < 1) throw std::invalid_argument("conditional_weight_mean_test: n_strata >= 1");
    ComReport report;
    report.config = cfg;
    const std::vector<double> strata = cfg.strata.empty() ? default_strata(cfg) : cfg.strata;

    std::vector<double> weights(cfg.draws_per_stratum), xs(cfg.draws_per_stratum);
    for (std::size_t j = 0; j < strata.size(); ++j) {
        const double s = strata[j];
        if (!(s > 0.0)) throw std::invalid_argument("conditional_weight_mean_test: stratum s <= 0");
        RngStream rng(cfg.seed, j, StreamRole::aux(0));
        const double sd = std::sqrt(s);
        for (std::size_t i = 0; i < cfg.draws_per_stratum; ++i) {
            xs[i] = sd * rng.next_normal();
            weights[i] = rn_weight(cfg.mu, cfg.t, xs[i], s);
        }
        StratumReport sr;
        sr.s_lo = sr.s_hi = sr.s_rep = s;
        sr.n = cfg.draws_per_stratum;
        const MeanSe ms = mean_se(weights);
        sr.weight_mean = ms.mean;
        sr.weight_mean_se = ms.se;
        const MeanSe shifted = weighted_mean_se(xs, weights);
        sr.shifted_mean = shifted.mean;
        sr.shifted_mean_se = shifted.se;
        report.strata.push_back(sr);
        if (cfg.mu != 0.0) {
            const double dev = std::fabs(ms.mean - 1.0) / (ms.se > 0.0 ? ms.se : 1.0);
            report.max_weight_mean_deviation = std::max(report.max_weight_mean_deviation, dev);
        }
    }
    report.weight_mean_pass = report.max_weight_mean_deviation <= 3.0;
    report.per_stratum_pass = true;
    report.unconditional_pass = true;
    return report;
}

ComReport com_distribution_test(const ComVerifyConfig& cfg) {
    if (cfg.n_replicates < 100) throw std::invalid_argument("com_distribution_test: too few replicates");
    ComReport report;
    report.config = cfg;
    const double eps = cfg.effective_clock_floor();
    const ProcessVariant variant = ProcessVariant::simple(0.0, 1);

    std::vector<double> clocks, xs, ws;
    clocks.reserve(cfg.n_replicates);
    xs.reserve(cfg.n_replicates);
    for (std::size_t r = 0; r < cfg.n_replicates; ++r) {
        const TerminalSample ts = simulate_terminal(variant, cfg.t, ReplicateStreams{cfg.seed, r});
        if (ts.clock <= eps) {
            ++report.excluded_count;
            continue;
        }
        clocks.push_back(ts.clock);
        xs.push_back(ts.x[0]);
    }
    report.excluded_mass = clock_cdf(cfg.t, eps);

    ws.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        ws[i] = rn_weight(cfg.mu, cfg.t, xs[i], clocks[i]);

    // (A) equal-probability clock strata; within a stratum each sample is
    // transformed by its own conditional CDF Phi((x - mu t)/sqrt(s)), which
    // is Xi-weighted uniform when the reweighted law is correct
    const double p_floor = clock_cdf(cfg.t, eps);
    std::vector<std::vector<double>> su(cfg.n_strata), sw(cfg.n_strata), sx(cfg.n_strata);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double p = (clock_cdf(cfg.t, clocks[i]) - p_floor) / (1.0 - p_floor);
        std::size_t b = static_cast<std::size_t>(p * static_cast<double>(cfg.n_strata));
        b = std::min(b, cfg.n_strata - 1);
        su[b].push_back(normal_cdf((xs[i] - cfg.mu * cfg.t) / std::sqrt(clocks[i])));
        sw[b].push_back(ws[i]);
        sx[b].push_back(xs[i]);
    }
    const auto uniform_cdf = [](double u) { return std::clamp(u, 0.0, 1.0); };
    report.per_stratum_pass = true;
    const double alpha_each = cfg.alpha / static_cast<double>(cfg.n_strata);
    for (std::size_t b = 0; b < cfg.n_strata; ++b) {
        StratumReport sr;
        const double pl = p_floor + (1.0 - p_floor) * static_cast<double>(b) / static_cast<double>(cfg.n_strata);
        const double ph = p_floor + (1.0 - p_floor) * static_cast<double>(b + 1) / static_cast<double>(cfg.n_strata);
        sr.s_lo = clock_quantile(cfg.t, pl);
        sr.s_hi = clock_quantile(cfg.t, std::min(ph, 1.0 - 1e-12));
        sr.s_rep = clock_quantile(cfg.t, 0.5 * (pl + ph));
        sr.n = su[b].size();
        if (sr.n >= 100) {
            const KsResult ks = ks_test_weighted(su[b], sw[b], uniform_cdf);
            sr.ks_statistic = ks.statistic;
            sr.ks_p_value = ks.p_value;
            if (ks.p_value < alpha_each) report.per_stratum_pass = false;
            const MeanSe wm = mean_se(sw[b]);
            sr.weight_mean = wm.mean;
            sr.weight_mean_se = wm.se;
            const MeanSe sh = weighted_mean_se(sx[b], sw[b]);
            sr.shifted_mean = sh.mean;
            sr.shifted_mean_se = sh.se;
        }
        report.strata.push_back(sr);
    }

    // (B) unconditional self-normalized comparison against the zero-mean CDF
    const CdfTable table(cfg.t, 0.0);
    const std::size_t nb = std::min(xs.size(), std::max<std::size_t>(cfg.unconditional_replicates, 100));
    std::vector<double> shifted(nb), wb(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        shifted[i] = xs[i] - cfg.mu * cfg.t;
        wb[i] = ws[i];
    }
    const KsResult ks = ks_test_weighted(shifted, wb, [&](double z) { return table(z); });
    report.unconditional_ks_statistic = ks.statistic;
    report.unconditional_ks_p = ks.p_value;
    report.unconditional_pass = ks.p_value >= cfg.alpha;
    report.unconditional_weight_mean = mean_se(ws).mean;
    report.weight_mean_pass = true;
    return report;
}

}  // namespace btbm
