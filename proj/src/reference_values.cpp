#include "dgp/reference_values.hpp"

#include <array>

namespace dgp::reference {

namespace {

constexpr std::array<double, 8> kShapes = {3, 4, 5, 6, 7, 8, 9, 10};
constexpr std::array<double, 19> kScales = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0,
                                            2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0};

// One row per scale, one column per shape.
constexpr std::array<double, 19 * 8> kDispersion = {
    16.47, 7.70, 5.04, 3.79, 3.08, 2.63, 2.31, 2.08,   // 0.1
    9.05,  4.40, 2.99, 2.33, 1.96, 1.72, 1.56, 1.44,   // 0.2
    6.58,  3.31, 2.32, 1.86, 1.60, 1.44, 1.33, 1.25,   // 0.3
    5.36,  2.77, 1.99, 1.63, 1.43, 1.30, 1.22, 1.16,   // 0.4
    4.63,  2.45, 1.80, 1.49, 1.33, 1.23, 1.16, 1.11,   // 0.5
    4.14,  2.24, 1.67, 1.41, 1.26, 1.18, 1.12, 1.08,   // 0.6
    3.79,  2.09, 1.58, 1.34, 1.22, 1.14, 1.09, 1.06,   // 0.7
    3.54,  1.98, 1.51, 1.30, 1.19, 1.12, 1.08, 1.05,   // 0.8
    3.34,  1.89, 1.46, 1.26, 1.16, 1.10, 1.06, 1.04,   // 0.9
    3.18,  1.82, 1.42, 1.24, 1.14, 1.09, 1.05, 1.03,   // 1.0
    2.45,  1.51, 1.24, 1.12, 1.06, 1.03, 1.02, 1.01,   // 2.0
    2.21,  1.41, 1.18, 1.09, 1.04, 1.02, 1.01, 1.00,   // 3.0
    2.09,  1.36, 1.15, 1.07, 1.03, 1.02, 1.01, 1.00,   // 4.0
    2.02,  1.33, 1.14, 1.06, 1.03, 1.01, 1.00, 1.00,   // 5.0
    1.97,  1.31, 1.13, 1.06, 1.03, 1.01, 1.00, 1.00,   // 6.0
    1.94,  1.29, 1.12, 1.05, 1.02, 1.01, 1.00, 1.00,   // 7.0
    1.91,  1.28, 1.12, 1.05, 1.02, 1.01, 1.00, 1.00,   // 8.0
    1.89,  1.28, 1.11, 1.05, 1.02, 1.01, 1.00, 1.00,   // 9.0
    1.87,  1.27, 1.11, 1.05, 1.02, 1.01, 1.00, 1.00,   // 10.0
};

constexpr std::array<FitRow, 10> kFits = {{
    {"accidents_2003", "dgp", 3, 3.8227, 0.6398, 0.2295, 0.0482},
    {"accidents_2004", "dgp", 3, 3.2601, 0.5140, 0.2933, 0.0599},
    {"accidents_2005", "dgp", 3, 3.3883, 0.5443, 0.2719, 0.0559},
    {"accidents_2006", "dgp", 3, 4.0439, 0.7178, 0.2182, 0.0479},
    {"accidents_2007", "dgp", 3, 3.5710, 0.6093, 0.2547, 0.0552},
    {"deaths_2003", "dlo", 0, 6.5547, 2.0654, 0.3142, 0.1181},
    {"deaths_2004", "dlo", 0, 13.8596, 9.8951, 0.1285, 0.0999},
    {"deaths_2005", "dlo", 0, 5.4875, 1.6803, 0.3811, 0.1435},
    {"deaths_2006", "dlo", 0, 4.3400, 1.1572, 0.5355, 0.1857},
    {"deaths_2007", "dlo", 0, 10.8251, 5.8841, 0.2039, 0.1245},
}};

constexpr std::array<ChiSquareRow, 10> kChiSquare = {{
    {"accidents_2003", "dgp", 17.930, 6, 12.592, 0.0064, true},
    {"accidents_2004", "dgp", 2.608, 6, 12.592, 0.8561, false},
    {"accidents_2005", "dgp", 5.537, 5, 11.071, 0.3539, false},
    {"accidents_2006", "dgp", 10.397, 5, 11.071, 0.0647, false},
    {"accidents_2007", "dgp", 4.903, 6, 12.592, 0.5563, false},
    {"deaths_2003", "dlo", 3.639, 1, 3.841, 0.0564, false},
    {"deaths_2004", "dlo", 0.590, 1, 3.841, 0.4425, false},
    {"deaths_2005", "dlo", 0.556, 1, 3.841, 0.4560, false},
    {"deaths_2006", "dlo", 0.203, 1, 3.841, 0.6527, false},
    {"deaths_2007", "dlo", 0.918, 1, 3.841, 0.3380, false},
}};

constexpr std::array<KsRow, 10> kKs = {{
    {"accidents_2003", "dgp", 0.3088, 0.3322},
    {"accidents_2004", "dgp", 0.1712, 0.8087},
    {"accidents_2005", "dgp", 0.3950, 0.1351},
    {"accidents_2006", "dgp", 0.4810, 0.0518},
    {"accidents_2007", "dgp", 0.1867, 0.7640},
    {"deaths_2003", "dlo", 0.1361, 0.2606},
    {"deaths_2004", "dlo", 0.1152, 0.3987},
    {"deaths_2005", "dlo", 0.0824, 0.6226},
    {"deaths_2006", "dlo", 0.0475, 0.9047},
    {"deaths_2007", "dlo", 0.0978, 0.2962},
}};

}  // namespace

DispersionGrid dispersion_grid() {
    return {kShapes, kScales, kDispersion};
}

std::span<const FitRow> fit_rows() {
    return kFits;
}

std::span<const ChiSquareRow> chi_square_rows() {
    return kChiSquare;
}

std::span<const KsRow> ks_rows() {
    return kKs;
}

}  // namespace dgp::reference
