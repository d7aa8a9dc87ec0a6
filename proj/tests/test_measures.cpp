#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logconc/measures.hpp"
#include "oracle.hpp"

using namespace logconc;
using measures::WeightedMeasure;

TEST_SUITE_BEGIN("measures");

TEST_CASE("lower incomplete integral") {
    CHECK(measures::lower_incomplete(0.0, 1.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-11));
    CHECK(measures::lower_incomplete(0.0, measures::kInfinity) ==
          doctest::Approx(1.0).epsilon(1e-11));

    // Complete value at p = 1/2 against the sqrt(pi) oracle.
    CHECK(measures::complete_mass(0.5) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));

    // Simpson oracle on the substituted integrand for a finite argument.
    const double expected =
        2.0 * oracle::simpson([](double y) { return std::exp(-y * y); }, 0.0,
                              std::sqrt(2.0), 1 << 14);
    CHECK(measures::lower_incomplete(0.5, 2.0) ==
          doctest::Approx(expected).epsilon(1e-10));

    CHECK_THROWS_AS(measures::lower_incomplete(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(measures::lower_incomplete(-0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(measures::lower_incomplete(0.5, -1.0), std::domain_error);
}

TEST_CASE("inverse of the incomplete integral") {
    CHECK(measures::inverse_lower_incomplete(0.0, 1.0 - std::exp(-1.0)) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(measures::inverse_lower_incomplete(0.0, 0.0) == 0.0);

    // Round trip through the quadrature oracle.
    const double y = measures::lower_incomplete(0.5, 2.0);
    CHECK(measures::inverse_lower_incomplete(0.5, y) ==
          doctest::Approx(2.0).epsilon(1e-9));

    const double full = measures::complete_mass(0.3);
    CHECK_THROWS_AS(measures::inverse_lower_incomplete(0.3, full),
                    std::domain_error);
    CHECK_THROWS_AS(measures::inverse_lower_incomplete(0.3, -0.1),
                    std::domain_error);
}

TEST_CASE("round trip grids and monotonicity") {
    for (double p : {0.0, 0.25, 0.5, 0.75, 0.9}) {
        const double full = measures::complete_mass(p);
        double prev_t = -1.0;
        for (int i = 1; i <= 100; ++i) {
            const double y = full * i / 101.0;
            const double t = measures::inverse_lower_incomplete(p, y);
            CHECK(t > prev_t);  // strict increase of G_p
            prev_t = t;
            CHECK(measures::lower_incomplete(p, t) ==
                  doctest::Approx(y).epsilon(1e-9));
        }
    }
}

TEST_CASE("derived functions of the inverse are decreasing / concave") {
    for (double p : {0.25, 0.5, 0.75}) {
        const double full = measures::complete_mass(p);
        const int n = 120;
        std::vector<double> dec(n), conc(n), ys(n);
        for (int i = 0; i < n; ++i) {
            ys[i] = full * (i + 1) / (n + 2.0);
            const double t = measures::inverse_lower_incomplete(p, ys[i]);
            dec[i] = std::pow(t, -p) * std::exp(-t);
            conc[i] = std::pow(t, 1.0 - p) * std::exp(-t);
        }
        for (int i = 1; i < n; ++i) CHECK(dec[i] <= dec[i - 1] + 1e-8);
        for (int i = 1; i + 1 < n; ++i)
            CHECK(conc[i + 1] - 2.0 * conc[i] + conc[i - 1] <= 1e-8);
    }
}

TEST_CASE("distribution function") {
    CHECK(measures::cdf(WeightedMeasure{0.0, 1.0}, std::log(2.0)) ==
          doctest::Approx(0.5).epsilon(1e-11));
    CHECK(measures::cdf(WeightedMeasure{0.0, 0.0}, 3.0) == doctest::Approx(3.0));
    CHECK(measures::cdf(WeightedMeasure{0.5, 0.0}, 4.0) == doctest::Approx(4.0));

    SUBCASE("additivity against the quadrature oracle") {
        const WeightedMeasure mu{0.3, 0.7};
        const double t1 = 0.4, t2 = 2.5;
        const double diff = measures::cdf(mu, t2) - measures::cdf(mu, t1);
        const double direct =
            measures::integrate([](double) { return 1.0; }, mu, t1, t2);
        CHECK(diff == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("inverse distribution function") {
    CHECK(measures::inverse_cdf(WeightedMeasure{0.0, 0.0}, 5.0) ==
          doctest::Approx(5.0));
    CHECK(measures::inverse_cdf(WeightedMeasure{0.0, 1.0}, 0.5) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-10));

    const WeightedMeasure mu{0.3, 2.0};
    const double y = measures::cdf(mu, 1.7);
    CHECK(measures::inverse_cdf(mu, y) == doctest::Approx(1.7).epsilon(1e-9));

    CHECK_THROWS_AS(measures::inverse_cdf(mu, mu.total_mass() * 1.01),
                    std::domain_error);
}

TEST_CASE("weighted integration") {
    const WeightedMeasure lebesgue{};
    CHECK(measures::integrate([](double) { return 1.0; }, lebesgue, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(measures::integrate([](double t) { return std::exp(-t); }, lebesgue, 0.0,
                              measures::kInfinity, {}, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-10));

    // Gamma(3) oracle.
    CHECK(measures::integrate([](double t) { return t * t * std::exp(-t); },
                              lebesgue, 0.0, measures::kInfinity, {}, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-9));

    SUBCASE("singular weight handled by substitution") {
        // int_0^1 t^{-0.5} dt = 2 exactly.
        CHECK(measures::integrate([](double) { return 1.0; },
                                  WeightedMeasure{0.5, 0.0}, 0.0, 1.0) ==
              doctest::Approx(2.0).epsilon(1e-11));
    }

    SUBCASE("divergent integrand reports non-convergence") {
        CHECK_THROWS_AS(measures::integrate([](double t) { return 1.0 + t; },
                                            lebesgue, 0.0, measures::kInfinity),
                        QuadratureError);
    }
}

TEST_SUITE_END();
