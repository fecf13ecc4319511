#pragma once

#include <span>

namespace dgp::reference {

// Published reference results for the bundled blackspot datasets. The
// `reproduce` command and the acceptance suite regenerate each table and
// diff against these values at the tolerances below.

// --- index-of-dispersion grid (table 4) ------------------------------------

struct DispersionGrid {
    std::span<const double> shapes;   // 8 values: 3..10
    std::span<const double> scales;   // 19 values: 0.1..1.0, 2..10
    // printed[scale_index * shapes.size() + shape_index]
    std::span<const double> printed;
};
DispersionGrid dispersion_grid();
inline constexpr double kDispersionTolerance = 0.01;  // absolute

// --- maximum likelihood fits (table 5) --------------------------------------

struct FitRow {
    const char* dataset;
    const char* model;      // "dgp" or "dlo"
    long long location;
    double shape;
    double shape_se;
    double scale;
    double scale_se;
};
std::span<const FitRow> fit_rows();
inline constexpr double kEstimateTolerance = 0.001;  // absolute, on shape and scale
inline constexpr double kStdErrorTolerance = 0.10;   // relative, on standard errors

// --- chi-square tests (table 6) ---------------------------------------------

struct ChiSquareRow {
    const char* dataset;
    const char* model;
    double statistic;
    int df;
    double critical_95;
    double p_value;
    bool reject;
};
std::span<const ChiSquareRow> chi_square_rows();
inline constexpr double kStatisticTolerance = 0.01;   // relative
inline constexpr double kCriticalTolerance = 0.001;   // absolute
inline constexpr double kPValueTolerance = 0.005;     // absolute

// --- Kolmogorov-Smirnov tests (table 7) -------------------------------------

struct KsRow {
    const char* dataset;
    const char* model;
    double statistic;
    double p_value;  // bootstrap estimate; reproducible only to Monte Carlo accuracy
};
std::span<const KsRow> ks_rows();
inline constexpr double kKsStatisticTolerance = 0.001;  // absolute
inline constexpr double kKsPValueTolerance = 0.05;      // absolute

}  // namespace dgp::reference
