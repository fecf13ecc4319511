#pragma once

#include <cstdint>
#include <vector>

namespace dgp {

// A moment of a heavy-tailed distribution may diverge, so the value carries
// an explicit finiteness flag instead of silently returning infinity.
struct Moment {
    double value = 0.0;
    bool finite = true;
};

/// Discrete generalized Pareto distribution on {location, location+1, ...}:
///
///   Pr(X >= x) = [1 + scale * (x - location)]^(-shape)
///
/// with shape > 0, scale > 0 and integer location >= 0. The location = 0
/// restriction is the discrete Lomax family; shape = 1 on top of that gives
/// the one-parameter family handled by the pgf/inverse-moment helpers below.
/// Instances are immutable and safe to share across threads.
class Distribution {
  public:
    Distribution(double shape, double scale, long long location = 0);

    double shape() const { return shape_; }
    double scale() const { return scale_; }
    long long location() const { return location_; }

    /// Pr(X <= x); zero below the support, tends to 1 as x grows.
    double cdf(long long x) const;

    /// Pr(X >= x) for x on the support; throws std::domain_error below it.
    /// Note the discrete convention: survival(x) = 1 - cdf(x - 1).
    double survival(long long x) const;

    /// Pr(X = x); zero below the support and strictly decreasing on it.
    double pmf(long long x) const;

    /// log pmf(x), evaluated in a form that stays accurate deep in the tail
    /// where the two survival terms nearly cancel.
    double log_pmf(long long x) const;

    /// Smallest support point x with cdf(x) >= gamma, for gamma in (0,1).
    long long quantile(double gamma) const;

    /// Failure rate pmf(x)/survival(x); strictly decreasing on the support.
    double hazard(long long x) const;

    /// Moment series sum_{x > location} [x^r - (x-1)^r] Pr(X >= x), i.e.
    /// E[X^r] - location^r. Divergent (finite = false) when shape <= order.
    /// Summation stops once a closed-form integral bracket pins the tail
    /// remainder below rel_tolerance of the total.
    Moment raw_moment(int order, double rel_tolerance = 1e-10) const;

    /// Variance-to-mean ratio of the location = 0 member with the same shape
    /// and scale; requires shape > 2 so that both moments are finite.
    double index_of_dispersion() const;

    /// Inverse-transform sample of size n >= 1. Identical seed gives an
    /// identical sequence; every value is >= location.
    std::vector<long long> sample(std::size_t n, std::uint64_t seed) const;
    void sample(std::size_t n, std::uint64_t seed, std::vector<long long>& out) const;

  private:
    double shape_;
    double scale_;
    long long location_;
};

/// Probability generating function E[z^X] of the shape = 1, location = 0
/// member, via the Hurwitz-Lerch transcendent. Requires |z| < 1; the z = 0
/// value is the removable-singularity limit pmf(0).
double pgf_shape_one(double scale, double z);

/// E[1/(X+1)] of the shape = 1, location = 0 member, in closed form through
/// the digamma function. Singular (throws) at scale = 1.
double inverse_moment_shape_one(double scale);

/// Lower bound for the variance of the shape = 1, location = 0 member,
/// computed as the ratio pmf(1)/pmf(0).
double variance_lower_bound_shape_one(double scale);

}  // namespace dgp
