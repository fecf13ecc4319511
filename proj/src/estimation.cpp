#include "dgp/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dgp {

namespace {

constexpr double kLogBound = 30.0;  // |log shape|, |log scale| cap during optimization

void require_on_support(const FrequencyTable& data, long long location) {
    if (data.min_value() < location) {
        throw std::invalid_argument("observed value below the support minimum");
    }
}

}  // namespace

SeedEstimate frequency_seed(const FrequencyTable& data, long long location) {
    const double n = static_cast<double>(data.total());
    const long long c0 = data.count_at(location);
    const long long c1 = data.count_at(location + 1);
    if (c0 <= 0 || c1 <= 0 || c0 >= data.total()) {
        return SeedEstimate{};
    }
    const double s1 = static_cast<double>(data.total() - c0) / n;
    const double s2 = static_cast<double>(data.total() - c0 - c1) / n;
    return detail::seed_from_survivals(s1, s2);
}

namespace detail {

SeedEstimate seed_from_survivals(double s1, double s2) {
    SeedEstimate fallback;
    if (!(s1 > 0.0) || !(s1 < 1.0) || !(s2 >= 0.0) || !(s2 < s1)) {
        return fallback;
    }
    const double rhs = std::log(s2) / std::log(s1);  // = log(1-p0-p1)/log(1-p0)
    if (!(rhs > 1.0) || !(rhs < 2.0)) {
        return fallback;
    }
    auto lhs = [](double log_scale) {
        const double l = std::exp(log_scale);
        return std::log1p(2.0 * l) / std::log1p(l);
    };
    double lo = std::log(1e-9);
    double hi = std::log(1e9);
    if (!(lhs(lo) > rhs) || !(lhs(hi) < rhs)) {
        return fallback;  // root outside the bracket
    }
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        (lhs(mid) > rhs ? lo : hi) = mid;
    }
    const double scale = std::exp(0.5 * (lo + hi));
    const double shape = -std::log(s1) / std::log1p(scale);
    return {shape, scale, true};
}

double log_likelihood_impl(double shape, double scale, long long location,
                           const FrequencyTable& data) {
    double total = 0.0;
    for (const auto& e : data.entries()) {
        const double k = static_cast<double>(e.value - location);
        const double la = std::log1p(scale * k);
        const double step = std::log1p(scale / (1.0 + scale * k));
        total += static_cast<double>(e.count) *
                 (-shape * la + std::log(-std::expm1(-shape * step)));
    }
    return total;
}

void log_likelihood_gradient_impl(double shape, double scale, long long location,
                                  const FrequencyTable& data, double& d_shape,
                                  double& d_scale) {
    d_shape = 0.0;
    d_scale = 0.0;
    for (const auto& e : data.entries()) {
        const double w = static_cast<double>(e.count);
        const double k = static_cast<double>(e.value - location);
        const double a = 1.0 + scale * k;
        const double b = 1.0 + scale * (k + 1.0);
        const double la = std::log1p(scale * k);
        const double step = std::log1p(scale / a);
        const double em = -std::expm1(-shape * step);  // = pmf / survival
        d_shape += w * (step / em - step - la);
        d_scale += w * (shape / (a * b * em) - shape * (k + 1.0) / b);
    }
}

CoreFit fit_core(const FrequencyTable& data, long long location, const FitOptions& opt) {
    require_on_support(data, location);
    const SeedEstimate seed = frequency_seed(data, location);
    if (data.entries().size() < 2) {
        // a single distinct value cannot identify two parameters; the
        // likelihood supremum sits at the parameter-space boundary
        const double ll =
            log_likelihood_impl(seed.shape0, seed.scale0, location, data);
        return {seed.shape0, seed.scale0, ll, seed, 0, false};
    }

    double u[2] = {std::log(seed.shape0), std::log(seed.scale0)};
    auto clamp_u = [](double v) { return std::clamp(v, -kLogBound, kLogBound); };
    u[0] = clamp_u(u[0]);
    u[1] = clamp_u(u[1]);

    auto eval = [&](const double* uu) {
        return log_likelihood_impl(std::exp(uu[0]), std::exp(uu[1]), location, data);
    };
    auto grad = [&](const double* uu, double* g) {
        double ga, gl;
        log_likelihood_gradient_impl(std::exp(uu[0]), std::exp(uu[1]), location, data, ga, gl);
        g[0] = std::exp(uu[0]) * ga;  // chain rule into log coordinates
        g[1] = std::exp(uu[1]) * gl;
    };

    double loglik = eval(u);
    if (opt.trace) {
        opt.trace->push_back(loglik);
    }
    double g[2];
    grad(u, g);
    double last_step = std::numeric_limits<double>::infinity();
    bool converged = false;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        const double gnorm = std::hypot(g[0], g[1]);
        if (gnorm < opt.gradient_tolerance && last_step < opt.step_tolerance) {
            converged = true;
            break;
        }

        // Newton direction from a finite-difference Hessian of the analytic gradient.
        double H[2][2];
        for (int j = 0; j < 2; ++j) {
            const double h = 1e-6 * std::max(1.0, std::abs(u[j]));
            double up[2] = {u[0], u[1]};
            double um[2] = {u[0], u[1]};
            up[j] += h;
            um[j] -= h;
            double gp[2], gm[2];
            grad(up, gp);
            grad(um, gm);
            H[0][j] = (gp[0] - gm[0]) / (2.0 * h);
            H[1][j] = (gp[1] - gm[1]) / (2.0 * h);
        }
        const double h01 = 0.5 * (H[0][1] + H[1][0]);
        const double det = H[0][0] * H[1][1] - h01 * h01;
        double d[2] = {0.0, 0.0};
        bool have_direction = false;
        if (std::isfinite(det) && det != 0.0) {
            d[0] = -(H[1][1] * g[0] - h01 * g[1]) / det;
            d[1] = -(H[0][0] * g[1] - h01 * g[0]) / det;
            have_direction = std::isfinite(d[0]) && std::isfinite(d[1]) &&
                             d[0] * g[0] + d[1] * g[1] > 0.0;  // must point uphill
        }
        if (!have_direction) {
            const double s = 1.0 / std::max(1.0, gnorm);
            d[0] = g[0] * s;
            d[1] = g[1] * s;
        }
        const double dinf = std::max(std::abs(d[0]), std::abs(d[1]));
        if (dinf > 5.0) {
            d[0] *= 5.0 / dinf;
            d[1] *= 5.0 / dinf;
        }

        // Backtracking; strictly improving steps are accepted.
        bool accepted = false;
        bool have_new_grad = false;
        double un[2], gn[2], ln = loglik;
        double t = 1.0;
        for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
            un[0] = clamp_u(u[0] + t * d[0]);
            un[1] = clamp_u(u[1] + t * d[1]);
            if (un[0] == u[0] && un[1] == u[1]) {
                break;  // clamped to a standstill
            }
            ln = eval(un);
            if (std::isfinite(ln) && ln > loglik) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // Improvements have dropped below the floating-point resolution
            // of the log-likelihood. The analytic gradient is still sharp, so
            // polish by accepting steps that contract the gradient norm.
            t = 1.0;
            for (int ls = 0; ls < 40 && !accepted; ++ls, t *= 0.5) {
                un[0] = clamp_u(u[0] + t * d[0]);
                un[1] = clamp_u(u[1] + t * d[1]);
                if (un[0] == u[0] && un[1] == u[1]) {
                    break;
                }
                grad(un, gn);
                if (std::isfinite(gn[0]) && std::isfinite(gn[1]) &&
                    std::hypot(gn[0], gn[1]) < gnorm) {
                    accepted = true;
                    have_new_grad = true;
                    ln = eval(un);
                }
            }
        }
        if (!accepted) {
            converged = gnorm < opt.gradient_tolerance;
            break;
        }
        last_step = std::max(std::abs(un[0] - u[0]), std::abs(un[1] - u[1]));
        u[0] = un[0];
        u[1] = un[1];
        loglik = ln;
        if (opt.trace) {
            opt.trace->push_back(loglik);
        }
        if (have_new_grad) {
            g[0] = gn[0];
            g[1] = gn[1];
        } else {
            grad(u, g);
        }
    }
    // A cap-riding iterate is a boundary artifact, not an interior optimum.
    if (std::abs(u[0]) >= kLogBound - 1e-9 || std::abs(u[1]) >= kLogBound - 1e-9) {
        converged = false;
    }
    return {std::exp(u[0]), std::exp(u[1]), loglik, seed, it, converged};
}

StdErrors se_from_observed_information(const std::function<double(double, double)>& loglik,
                                       double p1, double p2) {
    const double h1 = std::max(1e-5, 1e-5 * std::abs(p1));
    const double h2 = std::max(1e-5, 1e-5 * std::abs(p2));
    const double f0 = loglik(p1, p2);
    const double i11 = -(loglik(p1 + h1, p2) - 2.0 * f0 + loglik(p1 - h1, p2)) / (h1 * h1);
    const double i22 = -(loglik(p1, p2 + h2) - 2.0 * f0 + loglik(p1, p2 - h2)) / (h2 * h2);
    const double i12 = -(loglik(p1 + h1, p2 + h2) - loglik(p1 + h1, p2 - h2) -
                         loglik(p1 - h1, p2 + h2) + loglik(p1 - h1, p2 - h2)) /
                       (4.0 * h1 * h2);
    const double det = i11 * i22 - i12 * i12;
    if (!std::isfinite(det) || !(i11 > 0.0) || !(det > 0.0)) {
        return {std::numeric_limits<double>::quiet_NaN(),
                std::numeric_limits<double>::quiet_NaN(), false};
    }
    return {std::sqrt(i22 / det), std::sqrt(i11 / det), true};
}

}  // namespace detail

double log_likelihood(const Distribution& d, const FrequencyTable& data) {
    require_on_support(data, d.location());
    return detail::log_likelihood_impl(d.shape(), d.scale(), d.location(), data);
}

std::pair<double, double> log_likelihood_gradient(const Distribution& d,
                                                  const FrequencyTable& data) {
    require_on_support(data, d.location());
    double ds, dl;
    detail::log_likelihood_gradient_impl(d.shape(), d.scale(), d.location(), data, ds, dl);
    return {ds, dl};
}

FitResult fit_mle(const FrequencyTable& data, std::optional<long long> location,
                  const FitOptions& options) {
    const long long mu = location.value_or(data.min_value());
    const detail::CoreFit core = detail::fit_core(data, mu, options);
    Distribution dist(core.shape, core.scale, mu);
    const StdErrors se = standard_errors(dist, data);
    return {dist,          se.shape,       se.scale, se.available,
            core.loglik,   core.seed,      core.iterations, core.converged};
}

StdErrors standard_errors(const Distribution& d, const FrequencyTable& data) {
    require_on_support(data, d.location());
    auto f = [&](double shape, double scale) {
        if (!(shape > 0.0) || !(scale > 0.0)) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return detail::log_likelihood_impl(shape, scale, d.location(), data);
    };
    return detail::se_from_observed_information(f, d.shape(), d.scale());
}

}  // namespace dgp
