#include <cmath>
#include <stdexcept>

#include "dgp/distribution.hpp"
#include "doctest.h"

using dgp::Distribution;

namespace {

// Closed form of the shape = 1, location = 0 pmf.
double pmf_closed(double scale, long long x) {
    return scale / ((1.0 + scale * x) * (1.0 + scale * (x + 1)));
}

double pgf_series(double scale, double z, int terms) {
    double sum = 0.0, zk = 1.0;
    for (int x = 0; x < terms; ++x) {
        sum += zk * pmf_closed(scale, x);
        zk *= z;
    }
    return sum;
}

double inverse_moment_series(double scale) {
    // terms fall off like 1/x^3; 1e7 of them leave a tail below 1e-12
    double sum = 0.0;
    for (long long x = 10000000; x >= 0; --x) {
        sum += pmf_closed(scale, x) / static_cast<double>(x + 1);
    }
    return sum;
}

}  // namespace

TEST_SUITE_BEGIN("alpha-one");

TEST_CASE("pmf collapses to the closed form to 12 digits") {
    for (double scale : {0.1, 0.5, 1.0, 2.0, 7.3}) {
        const Distribution d(1.0, scale, 0);
        for (long long x = 0; x <= 1000; x += (x < 20 ? 1 : 37)) {
            CHECK(d.pmf(x) == doctest::Approx(pmf_closed(scale, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("pmf ratio is monotone increasing (log-convexity)") {
    for (double scale : {0.3, 1.0, 4.0}) {
        const Distribution d(1.0, scale, 0);
        double prev_ratio = 0.0;
        for (long long j = 1; j <= 1000; ++j) {
            const double ratio = d.pmf(j) / d.pmf(j - 1);
            CHECK(ratio > prev_ratio);
            prev_ratio = ratio;
        }
    }
}

TEST_CASE("pgf matches the series and its limits") {
    CHECK(dgp::pgf_shape_one(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dgp::pgf_shape_one(1.0, 1e-13) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(dgp::pgf_shape_one(1.0, 0.5) ==
          doctest::Approx(0.61370563888010938).epsilon(1e-12));
    CHECK(dgp::pgf_shape_one(1.0, 0.5) ==
          doctest::Approx(pgf_series(1.0, 0.5, 200)).epsilon(1e-12));
    CHECK(dgp::pgf_shape_one(0.4, -0.6) ==
          doctest::Approx(pgf_series(0.4, -0.6, 400)).epsilon(1e-11));
    // normalization: G(z) -> 1 as z -> 1-
    CHECK(std::abs(dgp::pgf_shape_one(0.5, 1.0 - 1e-6) - 1.0) < 1e-3);
    CHECK(std::abs(dgp::pgf_shape_one(2.0, 1.0 - 1e-6) - 1.0) < 1e-3);
    CHECK_THROWS_AS(dgp::pgf_shape_one(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(dgp::pgf_shape_one(1.0, -1.5), std::domain_error);
}

TEST_CASE("inverse moment matches brute-force series summation") {
    CHECK(dgp::inverse_moment_shape_one(0.5) ==
          doctest::Approx(inverse_moment_series(0.5)).epsilon(1e-10));
    CHECK(dgp::inverse_moment_shape_one(2.0) ==
          doctest::Approx(inverse_moment_series(2.0)).epsilon(1e-10));
    CHECK(dgp::inverse_moment_shape_one(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dgp::inverse_moment_shape_one(2.0) ==
          doctest::Approx(0.77258872223978124).epsilon(1e-12));
    CHECK(dgp::inverse_moment_shape_one(0.1) ==
          doctest::Approx(0.21432980599647266).epsilon(1e-12));
}

TEST_CASE("inverse moment limits") {
    // mass concentrates at zero for large scale, so E[1/(X+1)] -> 1;
    // for small scale the distribution flattens out and the moment -> 0
    CHECK(std::abs(dgp::inverse_moment_shape_one(1000.0) - 1.0) < 2e-3);
    CHECK(dgp::inverse_moment_shape_one(1e-4) < 1.5e-3);
    CHECK_THROWS_AS(dgp::inverse_moment_shape_one(1.0), std::domain_error);
    CHECK_THROWS_AS(dgp::inverse_moment_shape_one(0.0), std::invalid_argument);
}

TEST_CASE("variance lower bound is the pmf ratio") {
    CHECK(dgp::variance_lower_bound_shape_one(1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    // the ratio simplifies to 1/(1 + 2 scale)
    for (double scale : {0.25, 0.5, 1.0, 3.0, 10.0}) {
        CHECK(dgp::variance_lower_bound_shape_one(scale) ==
              doctest::Approx(1.0 / (1.0 + 2.0 * scale)).epsilon(1e-12));
    }
    const double far = dgp::variance_lower_bound_shape_one(1e6);
    CHECK(far > 0.0);
    CHECK(far < 1e-6);
}

TEST_SUITE_END();
