#pragma once

#include <functional>
#include <span>
#include <vector>

namespace btbm {

// Distribution-test utilities shared by the verification experiments.

// Limiting Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} e^{-2k^2 lambda^2}.
double kolmogorov_sf(double lambda);

struct KsResult {
    double statistic = 0.0;   // sup-norm distance D
    double p_value = 1.0;     // asymptotic, Stephens-corrected
    double effective_n = 0.0; // n, or Kish (sum w)^2 / sum w^2 when weighted
};

// One-sample test of samples against a reference CDF.  With weights the
// empirical CDF is self-normalized and the Kolmogorov scale uses the Kish
// effective sample size; the p-value is the documented asymptotic
// approximation in both cases.
KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);
KsResult ks_test_weighted(std::span<const double> samples, std::span<const double> weights,
                          const std::function<double(double)>& cdf);

// Two-sample test with effective size n1 n2 / (n1 + n2).
KsResult ks_test_two_sample(std::span<const double> a, std::span<const double> b);

double median(std::vector<double> values);

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
    std::size_t n = 0;
};

MeanSe mean_se(std::span<const double> values);

// Self-normalized weighted mean with the delta-method standard error
// sqrt(sum w_i^2 (x_i - mean)^2) / sum w.
MeanSe weighted_mean_se(std::span<const double> values, std::span<const double> weights);

}  // namespace btbm
