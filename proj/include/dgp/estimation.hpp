#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dgp/distribution.hpp"
#include "dgp/frequency_table.hpp"

namespace dgp {

/// Starting point for the likelihood maximization from the relative
/// frequencies of the two lowest support points. `solved` is false when that
/// system has no usable root and the (1,1) fallback was returned instead.
struct SeedEstimate {
    double shape0 = 1.0;
    double scale0 = 1.0;
    bool solved = false;
};

/// Frequency-method estimator: equates the observed relative frequencies at
/// `location` and `location + 1` to their model probabilities and solves.
/// The scale solves log(1+2L)/log(1+L) = log(1-p0-p1)/log(1-p0), whose left
/// side falls monotonically from 2 to 1; the shape then follows as
/// -log(1-p0)/log(1+scale). Falls back to (1,1) when either frequency is
/// zero or the right side leaves the solvable range.
SeedEstimate frequency_seed(const FrequencyTable& data, long long location);

/// Count-weighted log-likelihood sum_i count_i * log pmf(value_i).
/// Throws std::invalid_argument when any observed value is below the support.
double log_likelihood(const Distribution& d, const FrequencyTable& data);

/// Analytic partial derivatives of the log-likelihood in (shape, scale).
std::pair<double, double> log_likelihood_gradient(const Distribution& d,
                                                  const FrequencyTable& data);

struct FitOptions {
    double step_tolerance = 1e-10;      // infinity norm in (log shape, log scale)
    double gradient_tolerance = 1e-8;   // 2-norm of the log-coordinate gradient
    int max_iterations = 10000;
    std::vector<double>* trace = nullptr;  // accepted log-likelihood values, if wanted
};

struct StdErrors {
    double shape = 0.0;
    double scale = 0.0;
    bool available = false;
};

struct FitResult {
    Distribution distribution;
    double se_shape;
    double se_scale;
    bool se_available;
    double loglik;
    SeedEstimate seed;
    int iterations;
    bool converged;
};

/// Maximum likelihood fit of (shape, scale) with the location held fixed
/// (defaults to the sample minimum; pass 0 for a discrete Lomax fit).
/// Optimizes in (log shape, log scale) starting from frequency_seed;
/// non-convergence within max_iterations is flagged, never silent.
FitResult fit_mle(const FrequencyTable& data,
                  std::optional<long long> location = std::nullopt,
                  const FitOptions& options = {});

/// Asymptotic standard errors from the observed information: central
/// difference Hessian of -log_likelihood at the fitted point, inverted.
/// `available` is false when that matrix is not positive definite.
StdErrors standard_errors(const Distribution& d, const FrequencyTable& data);

namespace detail {

// Inversion core of the frequency method, taking the empirical survival
// values s1 = 1 - p0 and s2 = 1 - p0 - p1 (exact rationals of the counts, so
// no cancellation when p0 is close to 1); frequency_seed wraps it with the
// count bookkeeping.
SeedEstimate seed_from_survivals(double s1, double s2);

// Log-likelihood machinery shared with the bootstrap; bypasses Distribution
// construction in hot loops.
double log_likelihood_impl(double shape, double scale, long long location,
                           const FrequencyTable& data);
void log_likelihood_gradient_impl(double shape, double scale, long long location,
                                  const FrequencyTable& data, double& d_shape,
                                  double& d_scale);

struct CoreFit {
    double shape;
    double scale;
    double loglik;
    SeedEstimate seed;
    int iterations;
    bool converged;
};
CoreFit fit_core(const FrequencyTable& data, long long location, const FitOptions& options);

// Observed-information standard errors of an arbitrary two-parameter
// log-likelihood surface; exposed so the curvature step can be checked
// against synthetic surfaces with known curvature.
StdErrors se_from_observed_information(const std::function<double(double, double)>& loglik,
                                       double p1, double p2);

}  // namespace detail

}  // namespace dgp
