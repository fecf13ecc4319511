#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dgp/distribution.hpp"
#include "dgp/estimation.hpp"
#include "dgp/frequency_table.hpp"

namespace dgp {

/// One chi-square bin: the half-open integer range [lower, upper), open-ended
/// ([lower, inf)) when upper is absent. Bins partition the support.
struct Bin {
    long long lower;
    std::optional<long long> upper;
    long long observed;
    double expected;
};

struct BinSpec {
    std::vector<Bin> bins;
    long long observed_total() const;
    double expected_total() const;
};

/// Builds chi-square bins by walking the support left to right, closing a bin
/// once it holds at least 5 observations; the under-5 remainder is merged
/// backwards into the last bin, which is therefore always open-ended.
/// Throws when fewer than 2 bins result.
BinSpec build_bins(const Distribution& d, const FrequencyTable& data);

struct ChiSquareReport {
    double statistic;
    int bin_count;           // k
    int fitted_parameters;   // r
    int degrees_of_freedom;  // k - r - 1
    double critical_95;
    double p_value;
    bool reject_05;
    BinSpec bins;
};

/// Pearson chi-square test of `data` against the fitted distribution;
/// `fitted_parameters` is 3 for a full fit, 2 when the location was pinned,
/// 0 when comparing against fully specified parameters.
/// Throws when the binning leaves no degrees of freedom.
ChiSquareReport chi_square_test(const Distribution& d, const FrequencyTable& data,
                                int fitted_parameters);

/// Discrete Kolmogorov-Smirnov statistic sqrt(n) * sup |EDF - cdf| with the
/// supremum taken over every integer from the support minimum to the sample
/// maximum.
double ks_statistic(const Distribution& d, const FrequencyTable& data);

struct KsOptions {
    int replicates = 10000;
    std::uint64_t master_seed = 0;
    int threads = 0;  // 0 = hardware concurrency
    FitOptions fit;
};

struct KsReport {
    double statistic;        // empirical K_n of the observed data
    double p_value;          // fraction of replicate statistics above it
    int replicates;
    int refit_failures;      // replicates dropped from the denominator
    std::uint64_t master_seed;
    bool reject_05;
    bool refit_warning;      // more than 1% of replicates failed to refit
};

/// Parametric-bootstrap KS test: fit, simulate `replicates` samples from the
/// fit, refit each (location = its own sample minimum) and compare each
/// sample's statistic against its own refit. Deterministic for a given
/// (data, replicates, master_seed) regardless of thread count.
KsReport ks_bootstrap_test(const FrequencyTable& data,
                           std::optional<long long> location = std::nullopt,
                           const KsOptions& options = {});

/// Chi-square distribution helpers (regularized incomplete gamma under the
/// hood, accurate to ~1e-13).
double chi_squared_cdf(double x, int df);
double chi_squared_sf(double x, int df);
double chi_squared_quantile(double p, int df);

/// Child seed for replicate `index`: the (index+1)-th output of a SplitMix64
/// stream seeded with `master`. Fixed so runs are reproducible and replicates
/// independent of scheduling.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index);

}  // namespace dgp
