#include "dgp/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace dgp {

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("digamma: argument must be positive");
    }
    // Shift the argument up with psi(x) = psi(x+1) - 1/x, then use the
    // asymptotic expansion with Bernoulli terms through x^-14.
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv2 * (1.0 / 12.0 -
        inv2 * (1.0 / 120.0 -
        inv2 * (1.0 / 252.0 -
        inv2 * (1.0 / 240.0 -
        inv2 * (1.0 / 132.0 -
        inv2 * (691.0 / 32760.0 -
        inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double lerch_phi(double z, double s, double a) {
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error("lerch_phi: |z| must be < 1");
    }
    if (!(a > 0.0)) {
        throw std::invalid_argument("lerch_phi: a must be positive");
    }
    if (s < 0.0) {
        throw std::invalid_argument("lerch_phi: s must be non-negative");
    }
    const double az = std::abs(z);
    double zk = 1.0;   // z^k
    double azk = az;   // |z|^(k+1)
    double sum = 0.0;
    for (long long k = 0; k < 200000000; ++k) {
        const double kk = static_cast<double>(k);
        sum += (s == 1.0) ? zk / (kk + a) : zk * std::pow(kk + a, -s);
        // (k+a)^-s is decreasing, so the tail is bounded by a geometric series.
        const double tail = (s == 1.0)
            ? azk / ((kk + 1.0 + a) * (1.0 - az))
            : azk * std::pow(kk + 1.0 + a, -s) / (1.0 - az);
        if (tail < 1e-12 * std::abs(sum)) {
            return sum;
        }
        zk *= z;
        azk *= az;
    }
    throw std::runtime_error("lerch_phi: series did not reach the truncation target");
}

}  // namespace dgp
