#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logconc/geometry.hpp"
#include "oracle.hpp"

using namespace logconc;
using namespace logconc::geometry;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("builtin bodies") {
    SUBCASE("cube axis section") {
        const BodyProfile cube = builtin_body(BodyKind::CubeAxis, 3);
        CHECK(profiles::evaluate(cube.section, 0.0) == 1.0);
        CHECK(profiles::support_end(cube.section) == doctest::Approx(0.5));
        CHECK(profiles::mass(cube.section, measures::WeightedMeasure{}, 0.0,
                             measures::kInfinity) == doctest::Approx(0.5));
    }
    SUBCASE("ball is volume-normalized and Brunn-valid") {
        for (int n = 2; n <= 6; ++n) {
            const BodyProfile ball = builtin_body(BodyKind::Ball, n);
            const double vol = 2.0 * profiles::mass(ball.section,
                                                    measures::WeightedMeasure{}, 0.0,
                                                    measures::kInfinity);
            CHECK(vol == doctest::Approx(1.0).epsilon(1e-7));
            CHECK(profiles::is_valid(ball.section).ok);
        }
    }
    SUBCASE("l1 ball reproduces unit volume from the section relation") {
        const BodyProfile b = builtin_body(BodyKind::L1BallAxis, 2);
        const double r = profiles::support_end(b.section);
        // |K| = 2 section(0) r / n for the l1 ball.
        CHECK(2.0 * profiles::evaluate(b.section, 0.0) * r / 2.0 ==
              doctest::Approx(1.0).epsilon(1e-12));
        const double vol = 2.0 * profiles::mass(b.section,
                                                measures::WeightedMeasure{}, 0.0,
                                                measures::kInfinity);
        CHECK(vol == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(profiles::is_valid(b.section).ok);
    }
    SUBCASE("Brunn validity for every builtin body") {
        for (int n = 2; n <= 6; ++n)
            for (BodyKind kind :
                 {BodyKind::CubeAxis, BodyKind::Ball, BodyKind::L1BallAxis})
                CHECK(profiles::is_valid(builtin_body(kind, n).section).ok);
    }
}

TEST_CASE("slab volumes") {
    const BodyProfile cube = builtin_body(BodyKind::CubeAxis, 3);
    CHECK(slab_volume(cube, 0.25) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(slab_volume(cube, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(slab_volume(cube, 0.8) == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("disk slab against the circular-segment oracle") {
        const BodyProfile disk = builtin_body(BodyKind::Ball, 2);
        const double r = profiles::support_end(disk.section);
        const double h = 0.5 * r;
        // Area between the chords at -h and h: 2 (h sqrt(r^2-h^2) + r^2 asin(h/r)).
        const double expected =
            2.0 * (h * std::sqrt(r * r - h * h) + r * r * std::asin(h / r));
        CHECK(slab_volume(disk, h) == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("direction second moment") {
    const BodyProfile cube2 = builtin_body(BodyKind::CubeAxis, 2);
    const BodyProfile cube5 = builtin_body(BodyKind::CubeAxis, 5);
    CHECK(direction_second_moment(cube2) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-11));
    CHECK(direction_second_moment(cube5) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-11));

    SUBCASE("disk against the polar oracle") {
        const BodyProfile disk = builtin_body(BodyKind::Ball, 2);
        const double r = profiles::support_end(disk.section);
        // int_K x1^2 dx over the disk of radius r: pi r^4 / 4.
        CHECK(direction_second_moment(disk) ==
              doctest::Approx(std::numbers::pi * std::pow(r, 4.0) / 4.0)
                  .epsilon(1e-6));
    }
}

TEST_CASE("slab sandwich") {
    SUBCASE("cube n=2 at h=1/4: lower bound tight") {
        const BodyProfile cube = builtin_body(BodyKind::CubeAxis, 2);
        const SlabSandwichReport rep = slab_sandwich_check(cube, 0.25);
        CHECK(rep.applicable);
        CHECK(rep.slab == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rep.lower == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
        CHECK(rep.moment == doctest::Approx(1.0 / 12.0).epsilon(1e-11));
        const double expected_upper =
            2.0 * 0.0625 / (12.0 * std::pow(1.0 - std::sqrt(0.5), 2.0));
        CHECK(rep.upper == doctest::Approx(expected_upper).epsilon(1e-12));
        CHECK(rep.lower_report.satisfied);
        CHECK(rep.upper_report.satisfied);
    }
    SUBCASE("sandwich ordering for every builtin body") {
        for (int n = 2; n <= 5; ++n) {
            for (BodyKind kind :
                 {BodyKind::CubeAxis, BodyKind::Ball, BodyKind::L1BallAxis}) {
                const BodyProfile body = builtin_body(kind, n);
                const double end = profiles::support_end(body.section);
                for (double frac : {0.15, 0.3, 0.5}) {
                    const SlabSandwichReport rep =
                        slab_sandwich_check(body, frac * end);
                    if (!rep.applicable) continue;
                    CHECK(rep.lower <= rep.moment * (1.0 + 1e-7));
                    CHECK(rep.moment <= rep.upper * (1.0 + 1e-7));
                }
            }
        }
    }
}

TEST_CASE("isotropic sandwich") {
    SUBCASE("cube data: lower bound equals the true isotropic constant") {
        const IsotropicReport rep = isotropic_sandwich(2, 0.25, 0.5);
        CHECK(rep.applicable);
        CHECK(rep.L_lower == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-12));
        const double expected_upper =
            0.5 / (std::sqrt(2.0) * std::sqrt(12.0) * (1.0 - std::pow(2.0, -0.5)));
        CHECK(rep.L_upper == doctest::Approx(expected_upper).epsilon(1e-12));
        CHECK(rep.L_lower <= rep.L_upper);
    }
    SUBCASE("homogeneity in h at fixed slab") {
        const IsotropicReport a = isotropic_sandwich(3, 0.1, 0.4);
        const IsotropicReport b = isotropic_sandwich(3, 0.2, 0.4);
        CHECK(b.L_lower == doctest::Approx(2.0 * a.L_lower).epsilon(1e-12));
        CHECK(b.L_upper == doctest::Approx(2.0 * a.L_upper).epsilon(1e-12));
    }
    SUBCASE("ordering whenever applicable") {
        for (int n = 2; n <= 8; ++n)
            for (double slab : {0.2, 0.5, 0.75})
                CHECK(isotropic_sandwich(n, 0.3, slab).L_lower <=
                      isotropic_sandwich(n, 0.3, slab).L_upper * (1.0 + 1e-12));
    }
}

TEST_CASE("floating body radii") {
    const double L_square = 1.0 / std::sqrt(12.0);
    SUBCASE("outer radius is exact for the square") {
        for (double delta : {0.15, 0.3, 0.45}) {
            const FloatingRadii fr = floating_radius_bounds(L_square, 2, delta);
            CHECK(fr.applicable);
            CHECK(fr.r_outer ==
                  doctest::Approx((1.0 - 2.0 * delta) / 2.0).epsilon(1e-12));
            CHECK(fr.r_inner <= fr.r_outer * (1.0 + 1e-12));
        }
    }
    SUBCASE("spec example delta = 0.3") {
        const FloatingRadii fr = floating_radius_bounds(L_square, 2, 0.3);
        CHECK(fr.r_outer == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(fr.r_inner ==
              doctest::Approx(std::sqrt(0.5) * (1.0 - std::sqrt(0.6)))
                  .epsilon(1e-10));
    }
    SUBCASE("degenerate at delta = 1/2") {
        const FloatingRadii fr = floating_radius_bounds(1.0, 4, 0.5);
        CHECK(fr.r_outer == doctest::Approx(0.0));
    }
    SUBCASE("window") {
        CHECK(floating_radius_bounds(1.0, 2, 0.05).applicable == false);
        // n = 2: window starts at (1 - 3/4)/2 = 1/8.
        CHECK(floating_radius_bounds(1.0, 2, 0.125).applicable);
        CHECK(floating_radius_bounds(1.0, 2, 0.55).applicable == false);
    }
    SUBCASE("monotone decrease in delta on the admissible window") {
        for (int n : {2, 4, 7}) {
            double prev_in = measures::kInfinity, prev_out = measures::kInfinity;
            const double lo = 0.5 * (1.0 - dimension_threshold(n));
            for (int i = 0; i <= 20; ++i) {
                const double delta = lo + (0.5 - lo) * i / 20.0;
                const FloatingRadii fr = floating_radius_bounds(1.3, n, delta);
                CHECK(fr.r_inner <= prev_in + 1e-12);
                CHECK(fr.r_outer <= prev_out + 1e-12);
                prev_in = fr.r_inner;
                prev_out = fr.r_outer;
            }
        }
    }
}

TEST_CASE("dimension threshold") {
    CHECK(dimension_threshold(2) == doctest::Approx(0.75).epsilon(1e-15));
    for (int n = 2; n <= 10; ++n) CHECK(dimension_threshold(n) >= 0.75);
}

TEST_CASE("diagonal sections of the cube dominate the axis section") {
    // Hadwiger consistency at sampling scale: the diagonal-direction central
    // section is at least the axis value 1, within 3 sigma.
    for (int n : {2, 3}) {
        const MonteCarloSection mc = mc_diagonal_section(n, 1000000, 20240209);
        CHECK(mc.estimate + 3.0 * mc.std_error >= 1.0);
        // Known diagonal sections: sqrt(2) for n=2, 3 sqrt(3)/4 for n=3.
        const double exact = n == 2 ? std::sqrt(2.0) : 3.0 * std::sqrt(3.0) / 4.0;
        CHECK(mc.estimate == doctest::Approx(exact).epsilon(0.02));
    }
}

TEST_CASE("make_body rejects unnormalized sections") {
    CHECK_THROWS_AS(make_body(3, profiles::Indicator{1.0, 1.0}),
                    std::invalid_argument);
    const BodyProfile ok = make_body(3, profiles::Indicator{1.0, 0.5});
    CHECK(ok.normalized);
}

TEST_SUITE_END();
