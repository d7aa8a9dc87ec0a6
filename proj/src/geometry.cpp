#include "logconc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace logconc::geometry {

namespace {

using measures::WeightedMeasure;

double unit_ball_volume(int dim) {
    return std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

void require_dimension(int n) {
    if (n < 2) throw std::domain_error("body dimension must be >= 2");
}

}  // namespace

double dimension_threshold(int n) {
    require_dimension(n);
    return 1.0 - std::pow(double(n) / (n + 2.0), double(n));
}

BodyProfile builtin_body(BodyKind kind, int n) {
    require_dimension(n);
    BodyProfile body;
    body.n = n;
    switch (kind) {
        case BodyKind::CubeAxis:
            body.section = profiles::Indicator{1.0, 0.5};
            break;
        case BodyKind::Ball: {
            const double r = std::pow(unit_ball_volume(n), -1.0 / n);
            const double amp = unit_ball_volume(n - 1) * std::pow(r, n - 1.0);
            const double s = 1.0 / (n - 1.0);
            // Knots r sin(theta) keep the sampled concave branch g = amp^s cos(theta)
            // well resolved at the support end.
            constexpr int kKnots = 2048;
            profiles::SConcaveSampled section;
            section.s = s;
            section.knots.reserve(kKnots);
            section.g.reserve(kKnots);
            for (int j = 0; j < kKnots; ++j) {
                const double theta = 0.5 * std::numbers::pi * j / (kKnots - 1);
                section.knots.push_back(r * std::sin(theta));
                section.g.push_back(std::pow(amp, s) * std::cos(theta));
            }
            section.g.back() = 0.0;
            // Absorb the piecewise-linear interpolation defect so the sampled
            // body is volume-1 exactly.
            const double vol =
                2.0 * profiles::mass(section, WeightedMeasure{}, 0.0,
                                     measures::kInfinity);
            body.section = profiles::scale_amplitude(section, 1.0 / vol);
            break;
        }
        case BodyKind::L1BallAxis: {
            const double r = 0.5 * std::pow(std::tgamma(n + 1.0), 1.0 / n);
            const double amp =
                std::pow(2.0 * r, n - 1.0) / std::tgamma(double(n));
            body.section = profiles::PlateauPower{amp, 0.0, r, 1.0 / (n - 1.0)};
            break;
        }
    }
    return body;
}

BodyProfile make_body(int n, profiles::DecreasingProfile section,
                      const QuadratureConfig& cfg) {
    require_dimension(n);
    const double vol =
        2.0 * profiles::mass(section, WeightedMeasure{}, 0.0, measures::kInfinity, cfg);
    if (std::abs(vol - 1.0) > 1e-8)
        throw std::invalid_argument("make_body: section must satisfy 2 int section = 1");
    return BodyProfile{n, std::move(section), true};
}

double slab_volume(const BodyProfile& body, double h, const QuadratureConfig& cfg) {
    if (!(h >= 0.0)) throw std::domain_error("slab_volume: h must be >= 0");
    if (h == 0.0) return 0.0;
    return 2.0 * profiles::mass(body.section, WeightedMeasure{}, 0.0, h, cfg);
}

double direction_second_moment(const BodyProfile& body, const QuadratureConfig& cfg) {
    static const profiles::ConvexWeight t2 = profiles::ConvexWeight::power(2.0);
    return 2.0 * profiles::weighted_moment(body.section, t2, WeightedMeasure{}, cfg);
}

SlabSandwichReport slab_sandwich_check(const BodyProfile& body, double h,
                                       const QuadratureConfig& cfg) {
    SlabSandwichReport rep;
    rep.h = h;
    rep.slab = slab_volume(body, h, cfg);
    rep.moment = direction_second_moment(body, cfg);
    rep.applicable = rep.slab <= 0.75;

    rep.lower = rep.slab > 0.0 ? (h / rep.slab) * (h / rep.slab) / 3.0 : 0.0;
    const double root = 1.0 - std::pow(1.0 - rep.slab, 1.0 / body.n);
    rep.upper = rep.slab < 1.0
                    ? 2.0 * h * h /
                          ((body.n + 1.0) * (body.n + 2.0) * root * root)
                    : measures::kInfinity;

    rep.lower_report = bounds::make_report("slab-lower", bounds::Direction::Lower,
                                           rep.moment, rep.lower, rep.slab, 0.75);
    rep.upper_report = bounds::make_report("slab-upper", bounds::Direction::Upper,
                                           rep.moment, rep.upper, rep.slab, 0.75);
    return rep;
}

IsotropicReport isotropic_sandwich(int n, double h, double slab) {
    require_dimension(n);
    if (!(h > 0.0) || !(slab > 0.0) || !(slab <= 1.0))
        throw std::domain_error("isotropic_sandwich: need h > 0 and slab in (0, 1]");
    IsotropicReport rep;
    rep.n = n;
    rep.h = h;
    rep.slab = slab;
    rep.applicable = slab <= 0.75;
    rep.L_lower = 2.0 * h / slab / (2.0 * std::sqrt(3.0));
    const double root = 1.0 - std::pow(1.0 - slab, 1.0 / n);
    rep.L_upper = 2.0 * h / (std::sqrt(2.0) * std::sqrt((n + 1.0) * (n + 2.0)) * root);
    return rep;
}

FloatingRadii floating_radius_bounds(double L, int n, double delta) {
    require_dimension(n);
    if (!(L > 0.0)) throw std::domain_error("floating_radius_bounds: L must be > 0");
    FloatingRadii out;
    out.delta_min = 0.5 * (1.0 - dimension_threshold(n));
    out.delta_max = 0.5;
    out.applicable = delta >= out.delta_min && delta <= out.delta_max;
    out.r_inner = L * std::sqrt(0.5 * (n + 1.0) * (n + 2.0)) *
                  (1.0 - std::pow(2.0 * delta, 1.0 / n));
    out.r_outer = std::sqrt(3.0) * L * (1.0 - 2.0 * delta);
    return out;
}

MonteCarloSection mc_diagonal_section(int n, long samples, std::uint64_t seed,
                                      double half_width) {
    require_dimension(n);
    if (samples < 1000)
        throw std::invalid_argument("mc_diagonal_section: need >= 1000 samples");
    std::mt19937_64 eng(seed);
    const double inv_sqrt_n = 1.0 / std::sqrt(double(n));
    long hits = 0;
    for (long i = 0; i < samples; ++i) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) {
            const double x = static_cast<double>(eng() >> 11) * 0x1.0p-53 - 0.5;
            dot += x;
        }
        if (std::abs(dot * inv_sqrt_n) <= half_width) ++hits;
    }
    const double p = double(hits) / double(samples);
    MonteCarloSection out;
    out.samples = samples;
    out.estimate = p / (2.0 * half_width);
    out.std_error = std::sqrt(p * (1.0 - p) / double(samples)) / (2.0 * half_width);
    return out;
}

}  // namespace logconc::geometry
