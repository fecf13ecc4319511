// Command-line front end: evaluate the distributions, fit data, run the
// goodness-of-fit tests, simulate samples and regenerate the reference
// tables. Commands emit an envelope in json, csv or human form; json output
// is byte-identical across runs for identical inputs and seeds.
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure,
// 3 reference-reproduction out of tolerance.

#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dgp/datasets.hpp"
#include "dgp/distribution.hpp"
#include "dgp/estimation.hpp"
#include "dgp/frequency_table.hpp"
#include "dgp/gof.hpp"
#include "dgp/reference_values.hpp"
#include "dgp/version.hpp"

using json = nlohmann::ordered_json;
namespace ref = dgp::reference;

namespace {

struct ToleranceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g_format = "human";

void emit(const std::string& command, const json& inputs, const json& payload,
          const std::string& csv_text, const std::string& human_text) {
    if (g_format == "json") {
        json env;
        env["tool"] = "dgp";
        env["version"] = dgp::kVersion;
        env["command"] = command;
        env["inputs"] = inputs;
        env["payload"] = payload;
        std::cout << env.dump(2) << "\n";
    } else if (g_format == "csv") {
        std::cout << csv_text;
    } else {
        std::cout << human_text;
    }
}

dgp::FrequencyTable load_data(const std::string& spec) {
    if (spec.rfind("bundled:", 0) == 0) {
        return dgp::bundled(spec.substr(8));
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open data file '" + spec + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return dgp::parse_frequency_csv(ss.str(), spec);
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

json table_json(const dgp::FrequencyTable& t) {
    json rows = json::array();
    for (const auto& e : t.entries()) {
        rows.push_back({e.value, e.count});
    }
    return rows;
}

json fit_json(const dgp::FitResult& fit) {
    json j;
    j["alpha"] = fit.distribution.shape();
    j["lambda"] = fit.distribution.scale();
    j["mu"] = fit.distribution.location();
    j["se_alpha"] = fit.se_available ? json(fit.se_shape) : json(nullptr);
    j["se_lambda"] = fit.se_available ? json(fit.se_scale) : json(nullptr);
    j["loglik"] = fit.loglik;
    j["seed_alpha"] = fit.seed.shape0;
    j["seed_lambda"] = fit.seed.scale0;
    j["seed_solved"] = fit.seed.solved;
    j["iterations"] = fit.iterations;
    j["converged"] = fit.converged;
    return j;
}

std::string fit_human(const dgp::FitResult& fit, const dgp::FrequencyTable& data) {
    std::ostringstream os;
    os << "dataset: " << (data.label().empty() ? "<inline>" : data.label())
       << " (n=" << data.total() << ")\n"
       << "location (mu): " << fit.distribution.location() << "\n"
       << "alpha:  " << fmt(fit.distribution.shape(), 10);
    if (fit.se_available) os << "  (se " << fmt(fit.se_shape, 6) << ")";
    os << "\nlambda: " << fmt(fit.distribution.scale(), 10);
    if (fit.se_available) os << "  (se " << fmt(fit.se_scale, 6) << ")";
    os << "\nlog-likelihood: " << fmt(fit.loglik, 10) << "\n"
       << "seed: alpha0=" << fmt(fit.seed.shape0) << " lambda0=" << fmt(fit.seed.scale0)
       << (fit.seed.solved ? " (solved)" : " (fallback)") << "\n"
       << (fit.converged ? "converged" : "DID NOT CONVERGE") << " after " << fit.iterations
       << " iterations\n";
    return os.str();
}

// --- dist ---------------------------------------------------------------

struct DistArgs {
    double alpha = 0.0, lambda = 0.0;
    long long mu = 0;
    std::optional<long long> x;
    std::optional<double> gamma;
    int order = 1;
    double rel_tol = 1e-10;
    std::string grid;
};

std::pair<long long, long long> parse_grid(const std::string& grid) {
    const auto dots = grid.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("--grid expects lo..hi");
    }
    const long long lo = std::stoll(grid.substr(0, dots));
    const long long hi = std::stoll(grid.substr(dots + 2));
    if (hi < lo) {
        throw std::invalid_argument("--grid expects lo <= hi");
    }
    return {lo, hi};
}

int run_dist(const std::string& what, const DistArgs& a) {
    const dgp::Distribution d(a.alpha, a.lambda, a.mu);
    json inputs{{"alpha", a.alpha}, {"lambda", a.lambda}, {"mu", a.mu}};

    auto value_of = [&](long long x) -> double {
        if (what == "pmf") return d.pmf(x);
        if (what == "cdf") return d.cdf(x);
        if (what == "sf") return d.survival(x);
        return d.hazard(x);
    };

    if (what == "quantile") {
        if (!a.gamma) throw std::invalid_argument("quantile needs --gamma");
        inputs["gamma"] = *a.gamma;
        const long long q = d.quantile(*a.gamma);
        emit("dist.quantile", inputs, json{{"value", q}}, "gamma,value\n" + fmt(*a.gamma) +
             "," + std::to_string(q) + "\n", std::to_string(q) + "\n");
        return 0;
    }
    if (what == "moment") {
        inputs["order"] = a.order;
        inputs["rel_tolerance"] = a.rel_tol;
        const auto m = d.raw_moment(a.order, a.rel_tol);
        json payload{{"finite", m.finite}, {"value", m.finite ? json(m.value) : json("infinity")}};
        const std::string text = m.finite ? fmt(m.value, 12) : "infinite";
        emit("dist.moment", inputs, payload, "order,value\n" + std::to_string(a.order) + "," +
             text + "\n", text + "\n");
        return 0;
    }
    if (what == "dispersion") {
        const double v = d.index_of_dispersion();
        emit("dist.dispersion", inputs, json{{"value", v}}, "value\n" + fmt(v, 12) + "\n",
             fmt(v, 12) + "\n");
        return 0;
    }

    if (!a.grid.empty()) {
        const auto [lo, hi] = parse_grid(a.grid);
        inputs["grid"] = a.grid;
        json rows = json::array();
        std::string csv = "x,value\n";
        std::string human;
        for (long long x = lo; x <= hi; ++x) {
            const double v = value_of(x);
            rows.push_back({x, v});
            csv += std::to_string(x) + "," + fmt(v, 12) + "\n";
            human += std::to_string(x) + "\t" + fmt(v, 12) + "\n";
        }
        emit("dist." + what, inputs, json{{"rows", rows}}, csv, human);
        return 0;
    }
    if (!a.x) throw std::invalid_argument(what + " needs --x or --grid");
    inputs["x"] = *a.x;
    const double v = value_of(*a.x);
    emit("dist." + what, inputs, json{{"value", v}},
         "x,value\n" + std::to_string(*a.x) + "," + fmt(v, 12) + "\n", fmt(v, 12) + "\n");
    return 0;
}

// --- fit ------------------------------------------------------------------

int run_fit(const std::string& data_spec, const std::string& model,
            std::optional<long long> mu, const std::string& curve_path) {
    const auto data = load_data(data_spec);
    std::optional<long long> location = mu;
    if (model == "dlo" && !location) location = 0;
    const auto fit = dgp::fit_mle(data, location);

    json inputs{{"data", data_spec}, {"model", model}};
    if (mu) inputs["mu"] = *mu;
    std::string csv = "parameter,estimate,se\nalpha," + fmt(fit.distribution.shape(), 12) +
                      "," + (fit.se_available ? fmt(fit.se_shape, 12) : "NA") + "\nlambda," +
                      fmt(fit.distribution.scale(), 12) + "," +
                      (fit.se_available ? fmt(fit.se_scale, 12) : "NA") + "\n";
    emit("fit", inputs, fit_json(fit), csv, fit_human(fit, data));

    if (!curve_path.empty()) {
        std::ofstream out(curve_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + curve_path + "'");
        out << "value,observed,expected\n";
        const double n = static_cast<double>(data.total());
        for (long long x = fit.distribution.location(); x <= data.max_value(); ++x) {
            out << x << "," << data.count_at(x) << ","
                << fmt(n * fit.distribution.pmf(x), 12) << "\n";
        }
    }
    if (!fit.converged) {
        std::cerr << "error: fit did not converge\n";
        return 2;
    }
    return 0;
}

// --- gof ------------------------------------------------------------------

int run_gof(const std::string& data_spec, const std::string& model, const std::string& test,
            int replicates, std::uint64_t seed, int threads) {
    const auto data = load_data(data_spec);
    const std::optional<long long> location =
        (model == "dlo") ? std::optional<long long>(0) : std::nullopt;
    json inputs{{"data", data_spec}, {"model", model}, {"test", test}};

    if (test == "chi2") {
        const auto fit = dgp::fit_mle(data, location);
        if (!fit.converged) {
            std::cerr << "error: fit did not converge\n";
            return 2;
        }
        const int r = (model == "dgp") ? 3 : 2;
        const auto rep = dgp::chi_square_test(fit.distribution, data, r);
        json bins = json::array();
        std::string csv = "lo,hi,observed,expected\n";
        for (const auto& b : rep.bins.bins) {
            json jb{{"lo", b.lower},
                    {"hi", b.upper ? json(*b.upper) : json(nullptr)},
                    {"observed", b.observed},
                    {"expected", b.expected}};
            bins.push_back(jb);
            csv += std::to_string(b.lower) + "," +
                   (b.upper ? std::to_string(*b.upper) : "inf") + "," +
                   std::to_string(b.observed) + "," + fmt(b.expected, 10) + "\n";
        }
        json payload{{"statistic", rep.statistic},
                     {"k", rep.bin_count},
                     {"r", rep.fitted_parameters},
                     {"df", rep.degrees_of_freedom},
                     {"critical_95", rep.critical_95},
                     {"p_value", rep.p_value},
                     {"reject_05", rep.reject_05},
                     {"bins", bins}};
        std::ostringstream human;
        human << "chi-square = " << fmt(rep.statistic, 6) << "  df = " << rep.degrees_of_freedom
              << "  critical(0.95) = " << fmt(rep.critical_95, 6)
              << "  p = " << fmt(rep.p_value, 6) << "\n"
              << (rep.reject_05 ? "REJECT at the 0.05 level\n" : "not rejected at the 0.05 level\n");
        emit("gof.chi2", inputs, payload, csv, human.str());
        return 0;
    }

    inputs["replicates"] = replicates;
    inputs["seed"] = seed;
    dgp::KsOptions opt;
    opt.replicates = replicates;
    opt.master_seed = seed;
    opt.threads = threads;
    const auto rep = dgp::ks_bootstrap_test(data, location, opt);
    json payload{{"statistic", rep.statistic},       {"p_value", rep.p_value},
                 {"replicates", rep.replicates},     {"refit_failures", rep.refit_failures},
                 {"master_seed", rep.master_seed},   {"reject_05", rep.reject_05},
                 {"refit_warning", rep.refit_warning}};
    std::ostringstream human;
    human << "KS statistic = " << fmt(rep.statistic, 6) << "  bootstrap p = "
          << fmt(rep.p_value, 6) << "  (" << rep.replicates << " replicates, "
          << rep.refit_failures << " refit failures)\n"
          << (rep.reject_05 ? "REJECT at the 0.05 level\n" : "not rejected at the 0.05 level\n");
    if (rep.refit_warning) {
        human << "warning: more than 1% of replicate refits failed\n";
    }
    std::string csv = "statistic,p_value,replicates,refit_failures\n" + fmt(rep.statistic, 10) +
                      "," + fmt(rep.p_value, 10) + "," + std::to_string(rep.replicates) + "," +
                      std::to_string(rep.refit_failures) + "\n";
    emit("gof.ks", inputs, payload, csv, human.str());
    return 0;
}

// --- simulate ----------------------------------------------------------------

int run_simulate(double alpha, double lambda, long long mu, long long n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("simulate needs --n >= 1");
    const dgp::Distribution d(alpha, lambda, mu);
    const auto xs = d.sample(static_cast<std::size_t>(n), seed);
    const auto table = dgp::frequency_table_from_values(xs, "simulated");
    json inputs{{"alpha", alpha}, {"lambda", lambda}, {"mu", mu}, {"n", n}, {"seed", seed}};
    const std::string csv = dgp::emit_frequency_csv(table);
    emit("simulate", inputs, json{{"entries", table_json(table)}}, csv, csv);
    return 0;
}

// --- reproduce ----------------------------------------------------------------

int run_reproduce(int table, std::uint64_t seed, int replicates, int threads) {
    json rows = json::array();
    std::ostringstream human;
    std::ostringstream csv;
    int bad = 0;

    auto note = [&](bool ok) {
        if (!ok) ++bad;
        return ok ? "ok" : "DIFF";
    };

    if (table == 4) {
        const auto grid = ref::dispersion_grid();
        csv << "alpha,lambda,computed,printed,ok\n";
        for (std::size_t si = 0; si < grid.scales.size(); ++si) {
            for (std::size_t ai = 0; ai < grid.shapes.size(); ++ai) {
                const double printed = grid.printed[si * grid.shapes.size() + ai];
                const double computed =
                    dgp::Distribution(grid.shapes[ai], grid.scales[si], 0).index_of_dispersion();
                const bool ok = std::abs(computed - printed) <= ref::kDispersionTolerance;
                const char* verdict = note(ok);
                rows.push_back({{"alpha", grid.shapes[ai]},
                                {"lambda", grid.scales[si]},
                                {"computed", computed},
                                {"printed", printed},
                                {"ok", ok}});
                csv << grid.shapes[ai] << "," << grid.scales[si] << "," << fmt(computed, 6)
                    << "," << printed << "," << verdict << "\n";
                if (!ok) {
                    human << "DIFF alpha=" << grid.shapes[ai] << " lambda=" << grid.scales[si]
                          << ": computed " << fmt(computed, 6) << " vs printed " << printed
                          << "\n";
                }
            }
        }
        human << (bad == 0 ? "all 152 cells within 0.01\n"
                           : std::to_string(bad) + " of 152 cells out of tolerance\n");
    } else if (table == 5) {
        csv << "dataset,model,alpha,printed_alpha,lambda,printed_lambda,se_alpha,se_lambda,ok\n";
        for (const auto& row : ref::fit_rows()) {
            const auto fit = dgp::fit_mle(dgp::bundled(row.dataset), row.location);
            const bool ok =
                fit.converged &&
                std::abs(fit.distribution.shape() - row.shape) <= ref::kEstimateTolerance &&
                std::abs(fit.distribution.scale() - row.scale) <= ref::kEstimateTolerance &&
                fit.se_available &&
                std::abs(fit.se_shape - row.shape_se) / row.shape_se <= ref::kStdErrorTolerance &&
                std::abs(fit.se_scale - row.scale_se) / row.scale_se <= ref::kStdErrorTolerance;
            const char* verdict = note(ok);
            rows.push_back({{"dataset", row.dataset},
                            {"model", row.model},
                            {"alpha", fit.distribution.shape()},
                            {"printed_alpha", row.shape},
                            {"lambda", fit.distribution.scale()},
                            {"printed_lambda", row.scale},
                            {"se_alpha", fit.se_shape},
                            {"se_lambda", fit.se_scale},
                            {"ok", ok}});
            csv << row.dataset << "," << row.model << "," << fmt(fit.distribution.shape(), 8)
                << "," << row.shape << "," << fmt(fit.distribution.scale(), 8) << ","
                << row.scale << "," << fmt(fit.se_shape, 6) << "," << fmt(fit.se_scale, 6)
                << "," << verdict << "\n";
            human << row.dataset << " [" << row.model << "] alpha=" << fmt(fit.distribution.shape(), 6)
                  << " (printed " << row.shape << ") lambda=" << fmt(fit.distribution.scale(), 6)
                  << " (printed " << row.scale << ") " << verdict << "\n";
        }
    } else if (table == 6) {
        csv << "dataset,model,statistic,printed,df,printed_df,p,printed_p,ok\n";
        for (const auto& row : ref::chi_square_rows()) {
            const auto data = dgp::bundled(row.dataset);
            const long long mu = std::strcmp(row.model, "dgp") == 0 ? 3 : 0;
            const int r = std::strcmp(row.model, "dgp") == 0 ? 3 : 2;
            const auto fit = dgp::fit_mle(data, mu);
            const auto rep = dgp::chi_square_test(fit.distribution, data, r);
            const bool ok =
                std::abs(rep.statistic - row.statistic) / row.statistic <=
                    ref::kStatisticTolerance &&
                rep.degrees_of_freedom == row.df &&
                std::abs(rep.critical_95 - row.critical_95) <= ref::kCriticalTolerance &&
                std::abs(rep.p_value - row.p_value) <= ref::kPValueTolerance &&
                rep.reject_05 == row.reject;
            const char* verdict = note(ok);
            rows.push_back({{"dataset", row.dataset},
                            {"model", row.model},
                            {"statistic", rep.statistic},
                            {"printed_statistic", row.statistic},
                            {"df", rep.degrees_of_freedom},
                            {"printed_df", row.df},
                            {"critical_95", rep.critical_95},
                            {"p_value", rep.p_value},
                            {"printed_p", row.p_value},
                            {"reject_05", rep.reject_05},
                            {"ok", ok}});
            csv << row.dataset << "," << row.model << "," << fmt(rep.statistic, 6) << ","
                << row.statistic << "," << rep.degrees_of_freedom << "," << row.df << ","
                << fmt(rep.p_value, 6) << "," << row.p_value << "," << verdict << "\n";
            human << row.dataset << " [" << row.model << "] chi2=" << fmt(rep.statistic, 6)
                  << " (printed " << row.statistic << ") df=" << rep.degrees_of_freedom
                  << " p=" << fmt(rep.p_value, 4) << " (printed " << row.p_value << ") "
                  << verdict << "\n";
        }
    } else if (table == 7) {
        csv << "dataset,model,ks,printed_ks,p,printed_p,ok\n";
        std::size_t i = 0;
        for (const auto& row : ref::ks_rows()) {
            const auto data = dgp::bundled(row.dataset);
            const long long mu = std::strcmp(row.model, "dgp") == 0 ? 3 : 0;
            const auto fit = dgp::fit_mle(data, mu);
            const double k = dgp::ks_statistic(fit.distribution, data);
            dgp::KsOptions opt;
            opt.replicates = replicates;
            opt.master_seed = dgp::child_seed(seed, i++);
            opt.threads = threads;
            const auto rep = dgp::ks_bootstrap_test(data, mu, opt);
            const bool ok = std::abs(k - row.statistic) <= ref::kKsStatisticTolerance &&
                            std::abs(rep.p_value - row.p_value) <= ref::kKsPValueTolerance;
            const char* verdict = note(ok);
            rows.push_back({{"dataset", row.dataset},
                            {"model", row.model},
                            {"statistic", k},
                            {"printed_statistic", row.statistic},
                            {"p_value", rep.p_value},
                            {"printed_p", row.p_value},
                            {"refit_failures", rep.refit_failures},
                            {"ok", ok}});
            csv << row.dataset << "," << row.model << "," << fmt(k, 6) << "," << row.statistic
                << "," << fmt(rep.p_value, 6) << "," << row.p_value << "," << verdict << "\n";
            human << row.dataset << " [" << row.model << "] KS=" << fmt(k, 6) << " (printed "
                  << row.statistic << ") p=" << fmt(rep.p_value, 4) << " (printed "
                  << row.p_value << ") " << verdict << "\n";
        }
    } else {
        throw std::invalid_argument("--table must be one of 4, 5, 6, 7");
    }

    json inputs{{"table", table}};
    if (table == 7) {
        inputs["seed"] = seed;
        inputs["replicates"] = replicates;
    }
    emit("reproduce", inputs, json{{"rows", rows}, {"out_of_tolerance", bad}}, csv.str(),
         human.str());
    if (bad > 0) {
        std::cerr << "error: " << bad << " value(s) out of tolerance\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete generalized Pareto / discrete Lomax toolkit"};
    app.set_version_flag("--version", dgp::kVersion);
    app.add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand

    // dist
    auto* dist = app.add_subcommand("dist", "evaluate distribution functions");
    dist->fallthrough();
    dist->require_subcommand(1);
    DistArgs da;
    std::string dist_cmd;
    for (const char* name : {"pmf", "cdf", "sf", "quantile", "hazard", "moment", "dispersion"}) {
        auto* sub = dist->add_subcommand(name);
        sub->fallthrough();
        sub->add_option("--alpha", da.alpha, "shape parameter")->required();
        sub->add_option("--lambda", da.lambda, "scale parameter")->required();
        sub->add_option("--mu", da.mu, "location parameter (support minimum)");
        if (std::strcmp(name, "quantile") == 0) {
            sub->add_option("--gamma", da.gamma, "probability level in (0,1)");
        } else if (std::strcmp(name, "moment") == 0) {
            sub->add_option("--order", da.order, "moment order r >= 1");
            sub->add_option("--rel-tol", da.rel_tol, "series truncation target");
        } else if (std::strcmp(name, "dispersion") != 0) {
            sub->add_option("--x", da.x, "support point");
            sub->add_option("--grid", da.grid, "evaluate on lo..hi");
        }
        sub->callback([&dist_cmd, name] { dist_cmd = name; });
    }

    // fit
    auto* fit = app.add_subcommand("fit", "maximum likelihood fit");
    fit->fallthrough();
    std::string fit_data, fit_model = "dgp", fit_curve;
    std::optional<long long> fit_mu;
    fit->add_option("--data", fit_data, "CSV path or bundled:NAME")->required();
    fit->add_option("--model", fit_model, "dgp (mu = sample minimum) or dlo (mu = 0)")
        ->check(CLI::IsMember({"dgp", "dlo"}));
    fit->add_option("--mu", fit_mu, "override the location parameter");
    fit->add_option("--emit-fit-curve", fit_curve, "write observed-vs-expected CSV here");

    // gof
    auto* gof = app.add_subcommand("gof", "goodness-of-fit tests");
    gof->fallthrough();
    std::string gof_data, gof_model = "dgp", gof_test = "chi2";
    int gof_replicates = 10000;
    std::uint64_t gof_seed = 0;
    int gof_threads = 0;
    gof->add_option("--data", gof_data, "CSV path or bundled:NAME")->required();
    gof->add_option("--model", gof_model)->check(CLI::IsMember({"dgp", "dlo"}));
    gof->add_option("--test", gof_test)->check(CLI::IsMember({"chi2", "ks"}));
    gof->add_option("--replicates", gof_replicates, "bootstrap replicates");
    gof->add_option("--seed", gof_seed, "bootstrap master seed");
    gof->add_option("--threads", gof_threads, "bootstrap worker threads (0 = auto)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "draw an inverse-transform sample");
    sim->fallthrough();
    double sim_alpha = 0.0, sim_lambda = 0.0;
    long long sim_mu = 0, sim_n = 0;
    std::uint64_t sim_seed = 0;
    sim->add_option("--alpha", sim_alpha)->required();
    sim->add_option("--lambda", sim_lambda)->required();
    sim->add_option("--mu", sim_mu);
    sim->add_option("--n", sim_n, "sample size")->required();
    sim->add_option("--seed", sim_seed, "sample seed");

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "regenerate a reference table and diff it");
    rep->fallthrough();
    int rep_table = 0;
    std::uint64_t rep_seed = 42;
    int rep_replicates = 10000;
    int rep_threads = 0;
    rep->add_option("--table", rep_table, "4, 5, 6 or 7")->required();
    rep->add_option("--seed", rep_seed, "bootstrap master seed (table 7)");
    rep->add_option("--replicates", rep_replicates, "bootstrap replicates (table 7)");
    rep->add_option("--threads", rep_threads, "bootstrap worker threads");

    try {
        app.parse(argc, argv);
        if (dist->parsed()) {
            return run_dist(dist_cmd, da);
        }
        if (fit->parsed()) {
            return run_fit(fit_data, fit_model, fit_mu, fit_curve);
        }
        if (gof->parsed()) {
            return run_gof(gof_data, gof_model, gof_test, gof_replicates, gof_seed, gof_threads);
        }
        if (sim->parsed()) {
            return run_simulate(sim_alpha, sim_lambda, sim_mu, sim_n, sim_seed);
        }
        if (rep->parsed()) {
            return run_reproduce(rep_table, rep_seed, rep_replicates, rep_threads);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
