#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "btbm/quadrature.hpp"

namespace btbm {

// Transition density of the Brownian-time Brownian motion,
//
//   K_t(x, y) = 2 * int_0^inf  exp(-|x-y|^2 / 2s) / (2 pi s)^{d/2}
//                            * exp(-s^2 / 2t)     / sqrt(2 pi t)  ds,
//
// evaluated by adaptive quadrature after the substitution s = u^2, which
// removes the integrable s^{-1/2} endpoint singularity of the d = 1
// on-diagonal case.  For d >= 2 the on-diagonal integrand is s^{-d/2},
// not integrable: the density is genuinely infinite at x = y.

struct KernelQuery {
    double t = 1.0;
    std::vector<double> x{0.0};
    std::vector<double> y{0.0};

    uint32_t dim() const { return static_cast<uint32_t>(x.size()); }
};

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double s_max_multiplier = 12.0;  // truncation at s = c * sqrt(t), tail < e^{-c^2/2}
    bool small_s_substitution = true;
    int max_intervals = 4000;
};

class on_diagonal_divergence : public std::domain_error {
  public:
    on_diagonal_divergence()
        : std::domain_error("BTBM density is infinite on the diagonal for d >= 2") {}
};

struct KernelValue {
    double value = 0.0;
    double error_bound = 0.0;
};

KernelValue density_full(const KernelQuery& q, const QuadratureConfig& cfg = {});
double density(const KernelQuery& q, const QuadratureConfig& cfg = {});
double density(double t, double x, double y, const QuadratureConfig& cfg = {});

// Density of the mean-mu*t process at z: equals density(t; mu*t, z).
double density_shifted(double t, double z, double mu, const QuadratureConfig& cfg = {});

// P[X_B(t) + mu*t <= z], computed as a single smooth clock integral
//   2 * int_0^inf Phi((z - mu t)/sqrt(s)) halfnormal_t(s) ds.
double cdf(double t, double z, double mu = 0.0, const QuadratureConfig& cfg = {});

// Closed-form absolute moments of the mean-zero marginal at t,
//   E|X_B(t)|^p = 2^{3p/4} Gamma((p+1)/2) Gamma((p+2)/4) / pi * t^{p/4},
// derived by reducing the kernel's clock integral to Gamma integrals.
// Signed odd moments vanish by symmetry.
double moment(double t, int order, bool absolute);

// Dense monotone table of cdf(t, ., mu) for bulk evaluation (one-sample
// distribution tests); interpolation error is far below any statistical
// resolution used in the tests.
class CdfTable {
  public:
    CdfTable(double t, double mu, const QuadratureConfig& cfg = {}, std::size_t points = 4097);
    double operator()(double z) const;
    double t() const { return t_; }
    double mu() const { return mu_; }

  private:
    double t_, mu_, lo_, hi_, step_;
    std::vector<double> values_;
};

}  // namespace btbm
