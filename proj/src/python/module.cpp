#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dgp/datasets.hpp"
#include "dgp/distribution.hpp"
#include "dgp/estimation.hpp"
#include "dgp/frequency_table.hpp"
#include "dgp/gof.hpp"
#include "dgp/special_functions.hpp"
#include "dgp/version.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_dgpareto, m) {
    m.doc() = "Discrete generalized Pareto / discrete Lomax distributions: "
              "evaluation, sampling, estimation and goodness-of-fit tests";
    m.attr("__version__") = dgp::kVersion;

    py::class_<dgp::Moment>(m, "Moment")
        .def_readonly("value", &dgp::Moment::value)
        .def_readonly("finite", &dgp::Moment::finite)
        .def("__repr__", [](const dgp::Moment& mo) {
            return mo.finite ? "Moment(value=" + std::to_string(mo.value) + ")"
                             : std::string("Moment(infinite)");
        });

    py::class_<dgp::Distribution>(m, "Distribution")
        .def(py::init<double, double, long long>(), py::arg("shape"), py::arg("scale"),
             py::arg("location") = 0)
        .def_property_readonly("shape", &dgp::Distribution::shape)
        .def_property_readonly("scale", &dgp::Distribution::scale)
        .def_property_readonly("location", &dgp::Distribution::location)
        .def("cdf", &dgp::Distribution::cdf, py::arg("x"))
        .def("survival", &dgp::Distribution::survival, py::arg("x"))
        .def("pmf", &dgp::Distribution::pmf, py::arg("x"))
        .def("log_pmf", &dgp::Distribution::log_pmf, py::arg("x"))
        .def("quantile", &dgp::Distribution::quantile, py::arg("gamma"))
        .def("hazard", &dgp::Distribution::hazard, py::arg("x"))
        .def("raw_moment", &dgp::Distribution::raw_moment, py::arg("order"),
             py::arg("rel_tolerance") = 1e-10)
        .def("index_of_dispersion", &dgp::Distribution::index_of_dispersion)
        .def("sample",
             [](const dgp::Distribution& d, std::size_t n, std::uint64_t seed) {
                 return d.sample(n, seed);
             },
             py::arg("n"), py::arg("seed"))
        .def("__repr__", [](const dgp::Distribution& d) {
            return "Distribution(shape=" + std::to_string(d.shape()) +
                   ", scale=" + std::to_string(d.scale()) +
                   ", location=" + std::to_string(d.location()) + ")";
        });

    py::class_<dgp::FrequencyTable::Entry>(m, "Entry")
        .def_readonly("value", &dgp::FrequencyTable::Entry::value)
        .def_readonly("count", &dgp::FrequencyTable::Entry::count);

    py::class_<dgp::FrequencyTable>(m, "FrequencyTable")
        .def_static(
            "from_pairs",
            [](const std::vector<std::pair<long long, long long>>& pairs, std::string label) {
                std::vector<dgp::FrequencyTable::Entry> entries;
                entries.reserve(pairs.size());
                for (const auto& [v, c] : pairs) entries.push_back({v, c});
                return dgp::FrequencyTable::from_entries(std::move(entries), std::move(label));
            },
            py::arg("pairs"), py::arg("label") = "")
        .def_static("from_values",
                    [](const std::vector<long long>& values, std::string label) {
                        return dgp::frequency_table_from_values(values, std::move(label));
                    },
                    py::arg("values"), py::arg("label") = "")
        .def_static("from_csv", [](const std::string& text) {
            return dgp::parse_frequency_csv(text);
        })
        .def("to_csv", [](const dgp::FrequencyTable& t) { return dgp::emit_frequency_csv(t); })
        .def_property_readonly("label", &dgp::FrequencyTable::label)
        .def_property_readonly("entries",
                               [](const dgp::FrequencyTable& t) {
                                   std::vector<std::pair<long long, long long>> out;
                                   for (const auto& e : t.entries())
                                       out.emplace_back(e.value, e.count);
                                   return out;
                               })
        .def_property_readonly("total", &dgp::FrequencyTable::total)
        .def_property_readonly("min_value", &dgp::FrequencyTable::min_value)
        .def_property_readonly("max_value", &dgp::FrequencyTable::max_value)
        .def("count_at", &dgp::FrequencyTable::count_at, py::arg("value"))
        .def("__eq__", [](const dgp::FrequencyTable& a, const dgp::FrequencyTable& b) {
            return a == b;
        });

    py::class_<dgp::SeedEstimate>(m, "SeedEstimate")
        .def_readonly("shape0", &dgp::SeedEstimate::shape0)
        .def_readonly("scale0", &dgp::SeedEstimate::scale0)
        .def_readonly("solved", &dgp::SeedEstimate::solved);

    py::class_<dgp::FitResult>(m, "FitResult")
        .def_readonly("distribution", &dgp::FitResult::distribution)
        .def_readonly("se_shape", &dgp::FitResult::se_shape)
        .def_readonly("se_scale", &dgp::FitResult::se_scale)
        .def_readonly("se_available", &dgp::FitResult::se_available)
        .def_readonly("loglik", &dgp::FitResult::loglik)
        .def_readonly("seed", &dgp::FitResult::seed)
        .def_readonly("iterations", &dgp::FitResult::iterations)
        .def_readonly("converged", &dgp::FitResult::converged);

    py::class_<dgp::Bin>(m, "Bin")
        .def_readonly("lower", &dgp::Bin::lower)
        .def_property_readonly("upper",
                               [](const dgp::Bin& b) -> py::object {
                                   return b.upper ? py::cast(*b.upper) : py::none();
                               })
        .def_readonly("observed", &dgp::Bin::observed)
        .def_readonly("expected", &dgp::Bin::expected);

    py::class_<dgp::ChiSquareReport>(m, "ChiSquareReport")
        .def_readonly("statistic", &dgp::ChiSquareReport::statistic)
        .def_readonly("bin_count", &dgp::ChiSquareReport::bin_count)
        .def_readonly("fitted_parameters", &dgp::ChiSquareReport::fitted_parameters)
        .def_readonly("degrees_of_freedom", &dgp::ChiSquareReport::degrees_of_freedom)
        .def_readonly("critical_95", &dgp::ChiSquareReport::critical_95)
        .def_readonly("p_value", &dgp::ChiSquareReport::p_value)
        .def_readonly("reject_05", &dgp::ChiSquareReport::reject_05)
        .def_property_readonly("bins", [](const dgp::ChiSquareReport& r) {
            return r.bins.bins;
        });

    py::class_<dgp::KsReport>(m, "KsReport")
        .def_readonly("statistic", &dgp::KsReport::statistic)
        .def_readonly("p_value", &dgp::KsReport::p_value)
        .def_readonly("replicates", &dgp::KsReport::replicates)
        .def_readonly("refit_failures", &dgp::KsReport::refit_failures)
        .def_readonly("master_seed", &dgp::KsReport::master_seed)
        .def_readonly("reject_05", &dgp::KsReport::reject_05)
        .def_readonly("refit_warning", &dgp::KsReport::refit_warning);

    m.def("digamma", &dgp::digamma, py::arg("x"));
    m.def("lerch_phi", &dgp::lerch_phi, py::arg("z"), py::arg("s"), py::arg("a"));
    m.def("pgf_shape_one", &dgp::pgf_shape_one, py::arg("scale"), py::arg("z"));
    m.def("inverse_moment_shape_one", &dgp::inverse_moment_shape_one, py::arg("scale"));
    m.def("variance_lower_bound_shape_one", &dgp::variance_lower_bound_shape_one,
          py::arg("scale"));

    m.def("frequency_seed", &dgp::frequency_seed, py::arg("data"), py::arg("location"));
    m.def("log_likelihood", &dgp::log_likelihood, py::arg("distribution"), py::arg("data"));
    m.def("log_likelihood_gradient", &dgp::log_likelihood_gradient, py::arg("distribution"),
          py::arg("data"));
    m.def(
        "fit_mle",
        [](const dgp::FrequencyTable& data, std::optional<long long> location,
           int max_iterations) {
            dgp::FitOptions opt;
            opt.max_iterations = max_iterations;
            return dgp::fit_mle(data, location, opt);
        },
        py::arg("data"), py::arg("location") = std::nullopt, py::arg("max_iterations") = 10000);
    m.def("standard_errors",
          [](const dgp::Distribution& d, const dgp::FrequencyTable& data) {
              const auto se = dgp::standard_errors(d, data);
              return py::make_tuple(se.shape, se.scale, se.available);
          },
          py::arg("distribution"), py::arg("data"));

    m.def("build_bins",
          [](const dgp::Distribution& d, const dgp::FrequencyTable& data) {
              return dgp::build_bins(d, data).bins;
          },
          py::arg("distribution"), py::arg("data"));
    m.def("chi_square_test", &dgp::chi_square_test, py::arg("distribution"), py::arg("data"),
          py::arg("fitted_parameters"));
    m.def("ks_statistic", &dgp::ks_statistic, py::arg("distribution"), py::arg("data"));
    m.def(
        "ks_bootstrap_test",
        [](const dgp::FrequencyTable& data, std::optional<long long> location, int replicates,
           std::uint64_t seed, int threads) {
            dgp::KsOptions opt;
            opt.replicates = replicates;
            opt.master_seed = seed;
            opt.threads = threads;
            return dgp::ks_bootstrap_test(data, location, opt);
        },
        py::arg("data"), py::arg("location") = std::nullopt, py::arg("replicates") = 10000,
        py::arg("seed") = 0, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def("chi_squared_cdf", &dgp::chi_squared_cdf, py::arg("x"), py::arg("df"));
    m.def("chi_squared_quantile", &dgp::chi_squared_quantile, py::arg("p"), py::arg("df"));

    m.def("bundled_names", [] { return dgp::bundled_names(); });
    m.def("bundled", [](const std::string& name) { return dgp::bundled(name); },
          py::arg("name"));
    m.def("blackspot_years", [] {
        py::list out;
        for (const auto& y : dgp::blackspot_years()) {
            py::dict d;
            d["year"] = y.year;
            d["blackspots"] = y.blackspots;
            d["accidents"] = y.accidents;
            d["deaths"] = y.deaths;
            out.append(d);
        }
        return out;
    });
}
