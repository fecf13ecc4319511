// Acceptance suite: regenerates the published reference tables from the
// bundled data and checks every value at its pinned tolerance, then runs the
// analytic property suites. One PASS/FAIL line is printed per criterion and
// the exit code is the number of failed criteria.
//
//   dgp_acceptance [--replicates N] [--seed S] [--threads T] [--slow]
//                  [--only-calibration]
//
// --replicates controls the KS bootstrap (default 10000; 500 is a quick
// smoke run). The size-calibration study (criterion 6) only runs with
// --slow / --only-calibration plus DGP_SLOW=1, since it refits hundreds of
// thousands of synthetic datasets.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dgp/datasets.hpp"
#include "dgp/distribution.hpp"
#include "dgp/estimation.hpp"
#include "dgp/frequency_table.hpp"
#include "dgp/gof.hpp"
#include "dgp/reference_values.hpp"
#include "dgp/special_functions.hpp"

namespace ref = dgp::reference;
using dgp::Distribution;
using dgp::FrequencyTable;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool passed = true;
    bool skipped = false;
    std::vector<std::string> diffs;

    void fail(std::string what) {
        passed = false;
        if (diffs.size() < 24) {
            diffs.push_back(std::move(what));
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const Criterion& c) {
    if (c.skipped) {
        std::cout << "[SKIP] criterion " << c.number << ": " << c.title << "\n";
        return;
    }
    std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
              << c.title << "\n";
    for (const auto& d : c.diffs) {
        std::cout << "         " << d << "\n";
    }
}

long long model_location(const char* model) {
    return std::strcmp(model, "dgp") == 0 ? 3 : 0;
}

int model_parameters(const char* model) {
    return std::strcmp(model, "dgp") == 0 ? 3 : 2;
}

// --- criterion 1: dispersion grid ------------------------------------------

Criterion check_dispersion_grid() {
    Criterion c{1, "dispersion grid: 152 cells within 0.01"};
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = ref::dispersion_grid();
    int cells = 0;
    for (std::size_t si = 0; si < grid.scales.size(); ++si) {
        for (std::size_t ai = 0; ai < grid.shapes.size(); ++ai) {
            const double printed = grid.printed[si * grid.shapes.size() + ai];
            const double computed =
                Distribution(grid.shapes[ai], grid.scales[si], 0).index_of_dispersion();
            ++cells;
            if (std::abs(computed - printed) > ref::kDispersionTolerance) {
                std::ostringstream os;
                os << "shape=" << grid.shapes[ai] << " scale=" << grid.scales[si]
                   << ": computed " << computed << " vs printed " << printed;
                c.fail(os.str());
            }
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream title;
    title << "dispersion grid: " << cells << " cells within " << ref::kDispersionTolerance
          << " (" << dt << " s)";
    c.title = title.str();
    if (dt >= 10.0) {
        c.fail("runtime exceeded the 10 s target");
    }
    return c;
}

// --- criterion 2: maximum likelihood fits -----------------------------------

Criterion check_fits(std::vector<dgp::FitResult>& fits_out) {
    Criterion c{2, "maximum likelihood fits"};
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& row : ref::fit_rows()) {
        const auto data = dgp::bundled(row.dataset);
        const auto fit = dgp::fit_mle(data, row.location);
        fits_out.push_back(fit);
        std::ostringstream os;
        os << row.model << "/" << row.dataset << ": ";
        if (!fit.converged) {
            c.fail(os.str() + "did not converge");
            continue;
        }
        if (std::abs(fit.distribution.shape() - row.shape) > ref::kEstimateTolerance) {
            os << "shape " << fit.distribution.shape() << " vs " << row.shape;
            c.fail(os.str());
        }
        if (std::abs(fit.distribution.scale() - row.scale) > ref::kEstimateTolerance) {
            os << "scale " << fit.distribution.scale() << " vs " << row.scale;
            c.fail(os.str());
        }
        if (!fit.se_available ||
            std::abs(fit.se_shape - row.shape_se) / row.shape_se > ref::kStdErrorTolerance ||
            std::abs(fit.se_scale - row.scale_se) / row.scale_se > ref::kStdErrorTolerance) {
            os << "standard errors (" << fit.se_shape << ", " << fit.se_scale << ") vs ("
               << row.shape_se << ", " << row.scale_se << ")";
            c.fail(os.str());
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream title;
    title << "maximum likelihood fits: 10 datasets within " << ref::kEstimateTolerance
          << ", standard errors within " << 100 * ref::kStdErrorTolerance << "% (" << dt
          << " s)";
    c.title = title.str();
    if (dt >= 5.0) {
        c.fail("runtime exceeded the 5 s target");
    }
    return c;
}

// --- criterion 3: chi-square table -------------------------------------------

Criterion check_chi_square(const std::vector<dgp::FitResult>& fits) {
    Criterion c{3, "chi-square tests: statistics within 1%, df exact, verdicts identical"};
    const auto rows = ref::chi_square_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto data = dgp::bundled(row.dataset);
        const auto report = dgp::chi_square_test(fits[i].distribution, data,
                                                 model_parameters(row.model));
        std::ostringstream os;
        os << row.model << "/" << row.dataset << ": ";
        if (std::abs(report.statistic - row.statistic) / row.statistic >
            ref::kStatisticTolerance) {
            c.fail(os.str() + "statistic " + std::to_string(report.statistic) + " vs " +
                   std::to_string(row.statistic));
        }
        if (report.degrees_of_freedom != row.df) {
            c.fail(os.str() + "df " + std::to_string(report.degrees_of_freedom) + " vs " +
                   std::to_string(row.df));
        }
        if (std::abs(report.critical_95 - row.critical_95) > ref::kCriticalTolerance) {
            c.fail(os.str() + "critical " + std::to_string(report.critical_95) + " vs " +
                   std::to_string(row.critical_95));
        }
        if (std::abs(report.p_value - row.p_value) > ref::kPValueTolerance) {
            c.fail(os.str() + "p " + std::to_string(report.p_value) + " vs " +
                   std::to_string(row.p_value));
        }
        if (report.reject_05 != row.reject) {
            c.fail(os.str() + "verdict mismatch");
        }
    }
    return c;
}

// --- criterion 4: KS statistics and bootstrap p-values -----------------------

Criterion check_ks(const std::vector<dgp::FitResult>& fits, int replicates,
                   std::uint64_t seed, int threads) {
    Criterion c{4, "KS statistics and bootstrap p-values"};
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = ref::ks_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto data = dgp::bundled(row.dataset);
        std::ostringstream os;
        os << row.model << "/" << row.dataset << ": ";
        const double k = dgp::ks_statistic(fits[i].distribution, data);
        if (std::abs(k - row.statistic) > ref::kKsStatisticTolerance) {
            c.fail(os.str() + "statistic " + std::to_string(k) + " vs " +
                   std::to_string(row.statistic));
        }
        dgp::KsOptions opt;
        opt.replicates = replicates;
        opt.master_seed = dgp::child_seed(seed, i);
        opt.threads = threads;
        const auto report = dgp::ks_bootstrap_test(data, model_location(row.model), opt);
        if (std::abs(report.p_value - row.p_value) > ref::kKsPValueTolerance) {
            c.fail(os.str() + "bootstrap p " + std::to_string(report.p_value) + " vs " +
                   std::to_string(row.p_value));
        }
        if (report.refit_warning) {
            c.fail(os.str() + "more than 1% of replicate refits failed");
        }
    }
    std::ostringstream title;
    title << "KS statistics within " << ref::kKsStatisticTolerance << ", bootstrap p within "
          << ref::kKsPValueTolerance << " at " << replicates << " replicates ("
          << seconds_since(t0) << " s)";
    c.title = title.str();
    return c;
}

// --- criterion 5: property suites ---------------------------------------------

bool properties_core(std::string& what) {
    std::mt19937_64 rng(0x5CA1AB1E);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const long long locations[] = {0, 0, 1, 3, 17};
    for (int draw = 0; draw < 1000; ++draw) {
        const double shape = 0.4 * std::pow(9.0 / 0.4, u01(rng));
        const double scale = 0.1 * std::pow(50.0, u01(rng));
        const long long mu = locations[rng() % 5];
        const Distribution d(shape, scale, mu);
        const long long hi = std::min<long long>(d.quantile(0.999), mu + 200);
        double mass = 0.0;
        double prev_pmf = 2.0, prev_hz = 2.0;
        for (long long x = mu; x <= hi; ++x) {
            const double pm = d.pmf(x);
            mass += pm;
            const double hz = d.hazard(x);
            if (!(pm < prev_pmf) || !(hz < prev_hz)) {
                what = "monotonicity violated";
                return false;
            }
            prev_pmf = pm;
            prev_hz = hz;
            if (std::abs(pm - (d.cdf(x) - d.cdf(x - 1))) > 1e-12 * (1.0 + pm) ||
                std::abs(pm - (d.survival(x) - d.survival(x + 1))) > 1e-12 * (1.0 + pm) ||
                std::abs(hz - pm / d.survival(x)) > 1e-12 * (1.0 + hz)) {
                what = "consistency triangle violated";
                return false;
            }
        }
        if (std::abs(mass + d.survival(hi + 1) - 1.0) > 1e-12) {
            what = "normalization violated";
            return false;
        }
        for (int j = 0; j < 5; ++j) {
            const double gamma = std::min(1.0 - 1e-12, std::max(1e-12, u01(rng)));
            const long long q = d.quantile(gamma);
            if (d.cdf(q) < gamma || (q > mu && d.cdf(q - 1) >= gamma)) {
                what = "quantile adjunction violated";
                return false;
            }
        }
    }
    return true;
}

bool properties_gradient(std::string& what) {
    std::mt19937_64 rng(0xFEED);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int draw = 0; draw < 120; ++draw) {
        const double shape = 0.7 * std::pow(9.0, u01(rng));
        const double scale = 0.15 * std::pow(20.0, u01(rng));
        const long long mu = (draw % 2 == 0) ? 0 : 3;
        std::vector<FrequencyTable::Entry> entries;
        const int m = 3 + static_cast<int>(rng() % 12);
        for (int j = 0; j < m; ++j) {
            entries.push_back({mu + static_cast<long long>(rng() % 40),
                               1 + static_cast<long long>(rng() % 60)});
        }
        const auto data = FrequencyTable::from_entries(entries);
        const Distribution d(shape, scale, mu);
        const auto [ga, gl] = dgp::log_likelihood_gradient(d, data);
        auto ll = [&](double a, double l) {
            return dgp::log_likelihood(Distribution(a, l, mu), data);
        };
        const double ha = 1e-6 * std::max(1.0, shape);
        const double hl = 1e-6 * std::max(1.0, scale);
        const double fda = (ll(shape + ha, scale) - ll(shape - ha, scale)) / (2.0 * ha);
        const double fdl = (ll(shape, scale + hl) - ll(shape, scale - hl)) / (2.0 * hl);
        if (std::abs(ga - fda) > 1e-6 * std::max(1.0, std::abs(ga)) ||
            std::abs(gl - fdl) > 1e-6 * std::max(1.0, std::abs(gl))) {
            what = "gradient/finite-difference mismatch";
            return false;
        }
    }
    return true;
}

bool properties_seed(std::string& what) {
    for (double shape : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        for (double scale : {0.1, 0.5, 1.0, 5.0}) {
            const double s1 = std::exp(-shape * std::log1p(scale));
            const double s2 = std::exp(-shape * std::log1p(2.0 * scale));
            const auto seed = dgp::detail::seed_from_survivals(s1, s2);
            if (!seed.solved || std::abs(seed.shape0 - shape) > 1e-8 * shape ||
                std::abs(seed.scale0 - scale) > 1e-8 * scale) {
                what = "seed round-trip missed 8 digits";
                return false;
            }
        }
    }
    return true;
}

bool properties_shape_one(std::string& what) {
    for (double scale : {0.1, 0.5, 1.0, 2.0, 7.3}) {
        const Distribution d(1.0, scale, 0);
        for (long long x = 0; x <= 1000; x += (x < 20 ? 1 : 19)) {
            const double closed = scale / ((1.0 + scale * x) * (1.0 + scale * (x + 1)));
            if (std::abs(d.pmf(x) - closed) > 1e-12 * closed) {
                what = "shape-1 closed form missed 12 digits";
                return false;
            }
        }
    }
    return true;
}

bool properties_special(std::string& what) {
    for (double x = 1e-2; x <= 1e4; x *= 1.9) {
        if (std::abs(dgp::digamma(x + 1.0) - dgp::digamma(x) - 1.0 / x) >
            1e-10 * std::max(1.0, std::abs(dgp::digamma(x)))) {
            what = "digamma recurrence missed 10 digits";
            return false;
        }
    }
    for (double z = -0.95; z < 0.99; z += 0.1) {
        if (std::abs(z) < 1e-9) continue;
        if (std::abs(dgp::lerch_phi(z, 1.0, 1.0) + std::log1p(-z) / z) >
            1e-10 * std::abs(std::log1p(-z) / z)) {
            what = "lerch identity missed 10 digits";
            return false;
        }
    }
    return true;
}

Criterion check_properties() {
    Criterion c{5, "property suites (paper-data-free invariants)"};
    std::string what;
    if (!properties_core(what)) c.fail("core invariants: " + what);
    if (!properties_gradient(what)) c.fail("gradient check: " + what);
    if (!properties_seed(what)) c.fail("seed round-trip: " + what);
    if (!properties_shape_one(what)) c.fail("shape-1 collapse: " + what);
    if (!properties_special(what)) c.fail("special functions: " + what);
    return c;
}

// --- criterion 6: bootstrap size calibration ----------------------------------

Criterion check_size_calibration(std::uint64_t seed, int threads, bool enabled) {
    Criterion c{6, "bootstrap size calibration (opt-in: --slow with DGP_SLOW=1)"};
    if (!enabled) {
        c.skipped = true;
        return c;
    }
    const auto data = dgp::bundled("deaths_2006");
    const auto fit = dgp::fit_mle(data, 0);
    const std::size_t n = static_cast<std::size_t>(data.total());
    const int trials = 200;
    int rejected = 0;
    int errored = 0;
    for (int t = 0; t < trials; ++t) {
        const auto xs = fit.distribution.sample(n, dgp::child_seed(seed, 500000 + t));
        const auto synthetic = dgp::frequency_table_from_values(xs, "calibration");
        dgp::KsOptions opt;
        opt.replicates = 2000;
        opt.master_seed = dgp::child_seed(seed, 700000 + t);
        opt.threads = threads;
        try {
            const auto report = dgp::ks_bootstrap_test(synthetic, 0, opt);
            if (report.p_value < 0.05) ++rejected;
        } catch (const std::exception&) {
            ++errored;
        }
    }
    const double rate = static_cast<double>(rejected) / trials;
    std::ostringstream title;
    title << "bootstrap size calibration: rejection rate " << rate << " over " << trials
          << " trials";
    c.title = title.str();
    if (rate < 0.02 || rate > 0.09) {
        c.fail("rate outside [0.02, 0.09]");
    }
    if (errored > 2) {
        c.fail(std::to_string(errored) + " trials errored");
    }
    return c;
}

// --- criterion 7: dataset integrity --------------------------------------------

Criterion check_datasets() {
    Criterion c{7, "dataset integrity: catalog totals match the yearly registry"};
    const long long blackspots[] = {958, 780, 737, 748, 802};
    long long accidents = 0, deaths = 0;
    int i = 0;
    for (const auto& year : dgp::blackspot_years()) {
        const auto acc = dgp::bundled("accidents_" + std::to_string(year.year));
        const auto dth = dgp::bundled("deaths_" + std::to_string(year.year));
        if (acc.total() != blackspots[i] || dth.total() != blackspots[i]) {
            c.fail("blackspot count mismatch in " + std::to_string(year.year));
        }
        for (const auto& e : acc.entries()) accidents += e.value * e.count;
        for (const auto& e : dth.entries()) deaths += e.value * e.count;
        ++i;
    }
    if (accidents != 16552) {
        c.fail("total accidents " + std::to_string(accidents) + " vs 16552");
    }
    if (deaths != 895) {
        c.fail("total deaths " + std::to_string(deaths) + " vs 895");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    int replicates = 10000;
    std::uint64_t seed = 42;
    int threads = 0;
    bool slow = std::getenv("DGP_SLOW") != nullptr;
    bool only_calibration = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--replicates" && i + 1 < argc) {
            replicates = std::atoi(argv[++i]);
        } else if (arg == "--seed" && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--threads" && i + 1 < argc) {
            threads = std::atoi(argv[++i]);
        } else if (arg == "--slow") {
            slow = true;
        } else if (arg == "--only-calibration") {
            only_calibration = true;
        } else {
            std::cerr << "unknown argument: " << arg << "\n";
            return 64;
        }
    }

    std::vector<Criterion> results;
    if (only_calibration) {
        results.push_back(check_size_calibration(seed, threads, slow));
    } else {
        std::vector<dgp::FitResult> fits;
        results.push_back(check_dispersion_grid());
        results.push_back(check_fits(fits));
        results.push_back(check_chi_square(fits));
        results.push_back(check_ks(fits, replicates, seed, threads));
        results.push_back(check_properties());
        results.push_back(check_size_calibration(seed, threads, slow));
        results.push_back(check_datasets());
    }

    int failures = 0;
    for (const auto& c : results) {
        report(c);
        if (!c.passed && !c.skipped) ++failures;
    }
    return failures;
}
