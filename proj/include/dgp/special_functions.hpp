#pragma once

namespace dgp {

/// Digamma function psi(x) = Gamma'(x)/Gamma(x) for x > 0.
/// Accurate to at least 12 significant digits; throws std::domain_error for x <= 0.
double digamma(double x);

/// Hurwitz-Lerch transcendent Phi(z, s, a) = sum_{k>=0} z^k (k+a)^(-s)
/// for |z| < 1, s >= 0, a > 0. The series is truncated once the geometric
/// tail bound drops below 1e-12 of the partial sum.
double lerch_phi(double z, double s, double a);

}  // namespace dgp
