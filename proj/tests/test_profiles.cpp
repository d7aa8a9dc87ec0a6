#include <doctest.h>

#include <cmath>

#include "logconc/profiles.hpp"
#include "oracle.hpp"

using namespace logconc;
using namespace logconc::profiles;
using measures::WeightedMeasure;

namespace {
const WeightedMeasure kLebesgue{};
}

TEST_SUITE_BEGIN("profiles");

TEST_CASE("evaluation of the closed-form variants") {
    CHECK(evaluate(Indicator{2.0, 1.0}, 0.5) == 2.0);
    CHECK(evaluate(Indicator{2.0, 1.0}, 1.5) == 0.0);
    CHECK(evaluate(PlateauExponential{1.0, 1.0, 1.0}, 2.0) ==
          doctest::Approx(std::exp(-1.0)));
    CHECK(evaluate(PlateauPower{1.0, 0.0, 1.0, 1.0}, 0.25) == doctest::Approx(0.75));
    CHECK(evaluate(TruncatedExponential{1.0, 2.0, 1.0}, 0.5) ==
          doctest::Approx(std::exp(-1.0)));
    CHECK(evaluate(TruncatedExponential{1.0, 2.0, 1.0}, 1.5) == 0.0);
}

TEST_CASE("head and total mass") {
    SUBCASE("exponential") {
        const DecreasingProfile f = PlateauExponential{1.0, 0.0, 1.0};
        const ProfileStats st = stats(f, kLebesgue, std::log(2.0));
        CHECK(st.u == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(st.V == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("indicator") {
        const ProfileStats st = stats(Indicator{1.0, 2.0}, kLebesgue, 1.0);
        CHECK(st.u == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(st.V == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(st.ratio == doctest::Approx(0.5));
    }
    SUBCASE("linear ramp") {
        const ProfileStats st = stats(PlateauPower{1.0, 0.0, 1.0, 1.0}, kLebesgue, 0.5);
        CHECK(st.u == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
        CHECK(st.V == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("divergent profile is reported") {
        CHECK_THROWS_AS(stats(PlateauExponential{1.0, 1.0, 0.0}, kLebesgue, 1.0),
                        std::runtime_error);
    }
}

TEST_CASE("weighted moments") {
    const ConvexWeight t2 = ConvexWeight::power(2.0);
    CHECK(weighted_moment(PlateauExponential{1.0, 0.0, 1.0}, t2, kLebesgue) ==
          doctest::Approx(2.0).epsilon(1e-10));  // Gamma(3) oracle
    CHECK(weighted_moment(Indicator{1.0, 1.0}, t2, kLebesgue) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    CHECK(weighted_moment(PlateauPower{1.0, 0.0, 1.0, 1.0}, t2, kLebesgue) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-11));

    SUBCASE("growth beyond the decay rate diverges") {
        const ConvexWeight fast = ConvexWeight::cosh_rate(2.0);
        CHECK_THROWS_AS(
            weighted_moment(PlateauExponential{1.0, 0.0, 1.0}, fast, kLebesgue),
            std::runtime_error);
    }
}

TEST_CASE("mass consistency across the head split") {
    const DecreasingProfile f = random_logconcave(17, 6);
    for (const WeightedMeasure& mu :
         {WeightedMeasure{0.0, 0.0}, WeightedMeasure{0.5, 1.0}}) {
        const ProfileStats st = stats(f, mu, 0.8);
        const double tail = mass(f, mu, 0.8, measures::kInfinity);
        CHECK(st.u + tail == doctest::Approx(st.V).epsilon(1e-9));
    }
}

TEST_CASE("closed-form masses match quadrature") {
    const DecreasingProfile cases[] = {
        Indicator{1.3, 2.1}, TruncatedExponential{0.8, 1.7, 1.2},
        PlateauExponential{1.1, 0.6, 2.2}, PlateauPower{0.9, 0.4, 2.5, 0.7}};
    for (const auto& f : cases) {
        const double quad = mass(f, kLebesgue, 0.0, measures::kInfinity);
        CHECK(quad == doctest::Approx(oracle::analytic_mass(f)).epsilon(1e-10));
    }
}

TEST_CASE("random log-concave generator") {
    SUBCASE("two knots give a single-slope profile") {
        const LogConcaveSampled f = random_logconcave(1, 2);
        CHECK(f.knots.size() == 2);
        CHECK(f.phi.size() == 2);
    }
    SUBCASE("validity and peak at zero") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const LogConcaveSampled f = random_logconcave(seed, 2 + int(seed % 9));
            const ValidityReport ok = is_valid(DecreasingProfile{f});
            CHECK_MESSAGE(ok.ok, ok.message);
            CHECK(evaluate(DecreasingProfile{f}, 0.0) ==
                  doctest::Approx(std::exp(f.phi.front())));
            const double f0 = evaluate(DecreasingProfile{f}, 0.0);
            for (double t : {0.1, 0.5, 1.0, 3.0})
                CHECK(evaluate(DecreasingProfile{f}, t) <= f0 * (1 + 1e-12));
        }
    }
}

TEST_CASE("random s-concave generator") {
    SUBCASE("two knots give a linear ramp") {
        const SConcaveSampled f = random_sconcave(42, 1.0, 2);
        CHECK(f.knots.size() == 2);
        CHECK(f.g.back() == 0.0);
    }
    SUBCASE("validity, decrease, and f^s concavity") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const double s = 0.5 + (seed % 4) * 0.5;
            const SConcaveSampled f = random_sconcave(seed, s, 3 + int(seed % 6));
            const ValidityReport ok = is_valid(DecreasingProfile{f});
            CHECK_MESSAGE(ok.ok, ok.message);
            double prev = measures::kInfinity;
            for (int i = 0; i <= 64; ++i) {
                const double t = f.knots.back() * i / 64.0;
                const double v = evaluate(DecreasingProfile{f}, t);
                CHECK(v <= prev + 1e-12);
                prev = v;
            }
        }
    }
}

TEST_CASE("validity negative control") {
    LogConcaveSampled bad;
    bad.knots = {0.0, 1.0, 2.0};
    bad.phi = {0.0, -1.0, 0.5};  // rises on the last segment
    const ValidityReport rep = is_valid(DecreasingProfile{bad});
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("[1, 2]") != std::string::npos);

    LogConcaveSampled kinked;
    kinked.knots = {0.0, 1.0, 2.0};
    kinked.phi = {0.0, -2.0, -2.5};  // slopes -2 then -0.5: convex kink
    CHECK_FALSE(is_valid(DecreasingProfile{kinked}).ok);

    CHECK(is_valid(DecreasingProfile{Indicator{1.0, 1.0}}).ok);
    CHECK(is_valid(DecreasingProfile{PlateauExponential{1.0, 1.0, 0.0}}).ok);
}

TEST_CASE("amplitude scaling is linear in every output") {
    const DecreasingProfile f = random_logconcave(5, 5);
    const DecreasingProfile g = scale_amplitude(f, 3.5);
    const ConvexWeight t2 = ConvexWeight::power(2.0);
    const ProfileStats sf = stats(f, kLebesgue, 0.7);
    const ProfileStats sg = stats(g, kLebesgue, 0.7);
    CHECK(sg.u == doctest::Approx(3.5 * sf.u).epsilon(1e-13));
    CHECK(sg.V == doctest::Approx(3.5 * sf.V).epsilon(1e-13));
    CHECK(weighted_moment(g, t2, kLebesgue) ==
          doctest::Approx(3.5 * weighted_moment(f, t2, kLebesgue)).epsilon(1e-13));
}

TEST_CASE("convex weight construction") {
    CHECK(ConvexWeight::power(2.0)(3.0) == doctest::Approx(9.0));
    CHECK(ConvexWeight::cosh_rate(1.0)(0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ConvexWeight::power(0.5), std::invalid_argument);
    // sqrt is increasing but concave: rejected by the spot check.
    CHECK_THROWS_AS(
        ConvexWeight::custom([](double t) { return std::sqrt(t); }),
        std::invalid_argument);
    // decreasing: rejected.
    CHECK_THROWS_AS(
        ConvexWeight::custom([](double t) { return std::exp(-t); }),
        std::invalid_argument);

    const ConvexWeight anti = ConvexWeight::antiderivative(
        [](double t) { return 2.0 * t; }, 0.0, "t^2 via derivative");
    CHECK(anti(0.0) == 0.0);
    CHECK(anti(2.0) == doctest::Approx(4.0).epsilon(1e-11));
    CHECK(anti.derivative(3.0) == doctest::Approx(6.0));
}

TEST_SUITE_END();
