#include "dgp/gof.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dgp {

namespace {

constexpr long long kMinBinCount = 5;

// --- regularized incomplete gamma -----------------------------------------

double gamma_p_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 2000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 2000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

void check_df(int df) {
    if (df < 1) {
        throw std::invalid_argument("chi-square distribution: df must be >= 1");
    }
}

void run_indexed(int count, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
    }
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

double chi_squared_cdf(double x, int df) {
    check_df(df);
    if (x <= 0.0) return 0.0;
    const double a = 0.5 * df;
    const double xx = 0.5 * x;
    return xx < a + 1.0 ? gamma_p_series(a, xx) : 1.0 - gamma_q_continued_fraction(a, xx);
}

double chi_squared_sf(double x, int df) {
    check_df(df);
    if (x <= 0.0) return 1.0;
    const double a = 0.5 * df;
    const double xx = 0.5 * x;
    return xx < a + 1.0 ? 1.0 - gamma_p_series(a, xx) : gamma_q_continued_fraction(a, xx);
}

double chi_squared_quantile(double p, int df) {
    check_df(df);
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("chi_squared_quantile: p must lie in (0,1)");
    }
    double lo = 0.0;
    double hi = df + 10.0 * std::sqrt(2.0 * df) + 10.0;
    while (chi_squared_cdf(hi, df) < p) {
        hi *= 2.0;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (chi_squared_cdf(mid, df) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

long long BinSpec::observed_total() const {
    long long t = 0;
    for (const auto& b : bins) t += b.observed;
    return t;
}

double BinSpec::expected_total() const {
    double t = 0.0;
    for (const auto& b : bins) t += b.expected;
    return t;
}

BinSpec build_bins(const Distribution& d, const FrequencyTable& data) {
    if (data.min_value() < d.location()) {
        throw std::invalid_argument("build_bins: data below the support minimum");
    }
    const auto& entries = data.entries();
    const double n = static_cast<double>(data.total());

    std::vector<Bin> bins;
    std::size_t i = 0;
    long long remaining = data.total();
    long long lo = d.location();
    while (remaining >= kMinBinCount) {
        long long cum = 0;
        std::size_t j = i;
        while (cum < kMinBinCount) {
            cum += entries[j].count;
            ++j;
        }
        bins.push_back({lo, entries[j - 1].value + 1, cum, 0.0});
        lo = entries[j - 1].value + 1;
        remaining -= cum;
        i = j;
    }
    if (bins.empty()) {
        throw std::runtime_error("build_bins: too few observations to form bins");
    }
    // The under-5 remainder becomes part of the last bin, which absorbs the
    // whole upper tail so expectations total n exactly.
    bins.back().upper.reset();
    bins.back().observed += remaining;
    if (bins.size() < 2) {
        throw std::runtime_error("build_bins: fewer than 2 bins");
    }
    for (auto& b : bins) {
        b.expected = b.upper ? n * (d.survival(b.lower) - d.survival(*b.upper))
                             : n * d.survival(b.lower);
    }
    return {std::move(bins)};
}

ChiSquareReport chi_square_test(const Distribution& d, const FrequencyTable& data,
                                int fitted_parameters) {
    if (fitted_parameters < 0) {
        throw std::invalid_argument("chi_square_test: fitted_parameters must be >= 0");
    }
    BinSpec spec = build_bins(d, data);
    const int k = static_cast<int>(spec.bins.size());
    const int df = k - fitted_parameters - 1;
    if (df < 1) {
        throw std::runtime_error("chi_square_test: no degrees of freedom left after binning");
    }
    double stat = 0.0;
    for (const auto& b : spec.bins) {
        const double diff = static_cast<double>(b.observed) - b.expected;
        stat += diff * diff / b.expected;
    }
    const double critical = chi_squared_quantile(0.95, df);
    const double p = chi_squared_sf(stat, df);
    return {stat, k, fitted_parameters, df, critical, p, stat > critical, std::move(spec)};
}

double ks_statistic(const Distribution& d, const FrequencyTable& data) {
    if (data.min_value() < d.location()) {
        throw std::invalid_argument("ks_statistic: data below the support minimum");
    }
    const double n = static_cast<double>(data.total());
    // The supremum over every integer in [location, max] is attained at the
    // edges of the gaps between observed values: the EDF is constant across a
    // gap while the cdf increases monotonically.
    double best = 0.0;
    double edf = 0.0;
    long long gap_start = d.location();
    for (const auto& e : data.entries()) {
        if (e.value > gap_start) {
            best = std::max(best, std::abs(edf - d.cdf(gap_start)));
            best = std::max(best, std::abs(edf - d.cdf(e.value - 1)));
        }
        edf += static_cast<double>(e.count) / n;
        best = std::max(best, std::abs(edf - d.cdf(e.value)));
        gap_start = e.value + 1;
    }
    return std::sqrt(n) * best;
}

KsReport ks_bootstrap_test(const FrequencyTable& data, std::optional<long long> location,
                           const KsOptions& options) {
    if (options.replicates < 1) {
        throw std::invalid_argument("ks_bootstrap_test: replicates must be >= 1");
    }
    FitOptions fit_opt = options.fit;
    fit_opt.trace = nullptr;
    const long long mu = location.value_or(data.min_value());
    const detail::CoreFit fit0 = detail::fit_core(data, mu, fit_opt);
    if (!fit0.converged) {
        throw std::runtime_error("ks_bootstrap_test: observed-data fit did not converge");
    }
    const Distribution fitted(fit0.shape, fit0.scale, mu);
    const double empirical = ks_statistic(fitted, data);
    const std::size_t n = static_cast<std::size_t>(data.total());

    const int R = options.replicates;
    std::vector<double> stats(static_cast<std::size_t>(R),
                              std::numeric_limits<double>::quiet_NaN());

    run_indexed(R, options.threads, [&](int i) {
        std::vector<long long> draws;
        fitted.sample(n, child_seed(options.master_seed, static_cast<std::uint64_t>(i)), draws);
        const FrequencyTable synthetic = frequency_table_from_values(draws, "replicate");
        try {
            // Location re-estimated as the replicate's own sample minimum,
            // mirroring the estimator applied to the observed data. A refit
            // that stalls at the parameter cap still yields a usable
            // near-supremum iterate; only non-finite results are dropped.
            const detail::CoreFit refit =
                detail::fit_core(synthetic, synthetic.min_value(), fit_opt);
            if (std::isfinite(refit.shape) && std::isfinite(refit.scale) &&
                std::isfinite(refit.loglik)) {
                const Distribution rd(refit.shape, refit.scale, synthetic.min_value());
                stats[static_cast<std::size_t>(i)] = ks_statistic(rd, synthetic);
            }
        } catch (const std::exception&) {
            // leave NaN: counted as a refit failure
        }
    });

    int failures = 0;
    long long above = 0;
    for (double s : stats) {
        if (std::isnan(s)) {
            ++failures;
        } else if (s > empirical) {
            ++above;
        }
    }
    const int used = R - failures;
    if (used == 0) {
        throw std::runtime_error("ks_bootstrap_test: every replicate refit failed");
    }
    const double p = static_cast<double>(above) / static_cast<double>(used);
    return {empirical, p,           R, failures, options.master_seed,
            p < 0.05,  failures * 100 > R};
}

}  // namespace dgp
