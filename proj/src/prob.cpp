#include "logconc/prob.hpp"

#include <cmath>

namespace logconc::prob {

namespace {

using measures::kInfinity;
using measures::WeightedMeasure;
using profiles::DecreasingProfile;

const WeightedMeasure kLebesgue{};

double total_mass(const DecreasingProfile& f, const QuadratureConfig& cfg) {
    return profiles::mass(f, kLebesgue, 0.0, kInfinity, cfg);
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw std::runtime_error(std::string(what) + " is not finite");
}

}  // namespace

EvenRandomVariable make_even_variable(profiles::DecreasingProfile half,
                                      const QuadratureConfig& cfg) {
    const profiles::ValidityReport valid = profiles::is_valid(half);
    if (!valid.ok)
        throw std::invalid_argument("make_even_variable: " + valid.message);
    const double mass = 2.0 * total_mass(half, cfg);
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw std::invalid_argument("make_even_variable: half density not integrable");
    return EvenRandomVariable{profiles::scale_amplitude(half, 1.0 / mass)};
}

double l2_norm(const EvenRandomVariable& X, const QuadratureConfig& cfg) {
    static const profiles::ConvexWeight t2 = profiles::ConvexWeight::power(2.0);
    return std::sqrt(2.0 * profiles::weighted_moment(X.half_density, t2, kLebesgue,
                                                     cfg));
}

double mean_abs(const EvenRandomVariable& X, const QuadratureConfig& cfg) {
    static const profiles::ConvexWeight t1 = profiles::ConvexWeight::power(1.0);
    return 2.0 * profiles::weighted_moment(X.half_density, t1, kLebesgue, cfg);
}

double expectation(const EvenRandomVariable& X, const profiles::ConvexWeight& N,
                   const QuadratureConfig& cfg) {
    return 2.0 * profiles::weighted_moment(X.half_density, N, kLebesgue, cfg);
}

double laplace_transform(const EvenRandomVariable& X, double s,
                         const QuadratureConfig& cfg) {
    if (s == 0.0) return 1.0;
    return expectation(X, profiles::ConvexWeight::cosh_rate(std::abs(s)), cfg);
}

double median_abs(const EvenRandomVariable& X, const QuadratureConfig& cfg) {
    auto head = [&](double m) {
        return 2.0 * profiles::mass(X.half_density, kLebesgue, 0.0, m, cfg);
    };
    double hi = 1.0;
    const double end = profiles::support_end(X.half_density);
    if (std::isfinite(end)) {
        hi = end;
    } else {
        while (head(hi) < 0.5) hi *= 2.0;
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = head(mid) - 0.5;
        if (std::abs(fm) <= 1e-13) return mid;
        (fm < 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

MedianSandwich median_sandwich(const EvenRandomVariable& X,
                               const profiles::ConvexWeight& N,
                               const QuadratureConfig& cfg) {
    MedianSandwich out;
    out.median = median_abs(X, cfg);
    out.lower = 0.5 * std::sqrt(2.0) * std::log(2.0) * l2_norm(X, cfg);

    const double en = expectation(X, N, cfg);
    require_finite(en, "median_sandwich: E N(X)");
    // Ntilde(t) = (1/t) int_0^t N, increasing; invert by bisection.
    auto ntilde = [&](double t) {
        return integrate_adaptive([&N](double w) { return N(w); }, 0.0, t, cfg)
                   .value /
               t;
    };
    double hi = 1.0;
    int guard = 0;
    while (ntilde(hi) < en) {
        hi *= 2.0;
        if (++guard > 300)
            throw std::runtime_error("median_sandwich: Ntilde inverse out of range");
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ntilde(mid) < en ? lo : hi) = mid;
        if (hi - lo <= 1e-14 * std::max(1.0, hi)) break;
    }
    out.upper = 0.25 * (lo + hi);
    return out;
}

double sconcave_median_lower(const EvenRandomVariable& X, double s,
                             const QuadratureConfig& cfg) {
    if (!(s > 0.0))
        throw std::domain_error("sconcave_median_lower: s must be positive");
    const double factor = std::sqrt(0.5 * (2.0 * s + 1.0) * (3.0 * s + 1.0)) *
                          -std::expm1(-s / (s + 1.0) * std::log(2.0)) / s;
    return factor * l2_norm(X, cfg);
}

double laplace_lower(double m, double s) {
    if (!(m > 0.0)) throw std::domain_error("laplace_lower: median must be positive");
    if (s == 0.0) return 1.0;
    const double a = 2.0 * std::abs(s) * m;
    return std::sinh(a) / a;
}

TailVariable make_tail_variable(profiles::DecreasingProfile survival,
                                const QuadratureConfig& cfg) {
    const profiles::ValidityReport valid = profiles::is_valid(survival);
    if (!valid.ok)
        throw std::invalid_argument("make_tail_variable: " + valid.message);
    const double at0 = profiles::evaluate(survival, 0.0);
    if (!(at0 > 0.0))
        throw std::invalid_argument("make_tail_variable: survival(0) must be positive");
    TailVariable X{profiles::scale_amplitude(survival, 1.0 / at0)};
    const double mean = total_mass(X.survival, cfg);
    if (!std::isfinite(mean))
        throw std::invalid_argument("make_tail_variable: infinite mean");
    return X;
}

JensenReport jensen_improved(const TailVariable& X, const profiles::ConvexWeight& N,
                             double h, const QuadratureConfig& cfg) {
    if (!(h > 0.0)) throw std::domain_error("jensen_improved: h must be positive");
    if (N.value_at_origin() != 0.0 || !N.has_derivative())
        throw std::invalid_argument(
            "jensen_improved: N must vanish at 0 and carry a derivative");

    JensenReport rep;
    rep.mean = total_mass(X.survival, cfg);
    rep.head = profiles::mass(X.survival, kLebesgue, 0.0, h, cfg);
    rep.applicable = rep.head <= 0.5 * rep.mean * (1.0 + 1e-12);
    rep.classical = N(rep.mean);
    rep.bound = rep.head / h * N(h / rep.head * rep.mean);

    // E N(X) = int_0^inf N'(t) P(X >= t) dt.
    std::vector<double> cuts = profiles::breakpoints(X.survival);
    auto integrand = [&](double t) {
        return N.derivative(t) * profiles::evaluate(X.survival, t);
    };
    double oracle = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        oracle += integrate_adaptive(integrand, cuts[i], cuts[i + 1], cfg).value;
    if (std::isinf(profiles::support_end(X.survival))) {
        const double rate = profiles::decay_rate(X.survival) - N.growth_rate();
        if (rate <= 0.0) throw std::runtime_error("jensen_improved: divergent E N(X)");
        oracle += integrate_to_infinity(integrand, cuts.back(), cfg, rate).value;
    }
    rep.oracle = oracle;
    require_finite(rep.oracle, "jensen_improved: E N(X)");
    return rep;
}

AnticoncentrationReport anticoncentration(const EvenRandomVariable& X, double h,
                                          const QuadratureConfig& cfg) {
    if (!(h >= 0.0))
        throw std::domain_error("anticoncentration: h must be >= 0");
    AnticoncentrationReport rep;
    rep.h = h;
    rep.prob = 2.0 * profiles::mass(X.half_density, kLebesgue, 0.0, h, cfg);
    rep.l2norm = l2_norm(X, cfg);
    rep.premise_threshold = 1.0 - std::exp(-std::sqrt(3.0));
    rep.bound = -std::expm1(-std::sqrt(2.0) * h / rep.l2norm);
    rep.applicable = rep.prob <= rep.premise_threshold + 1e-12;
    rep.satisfied = rep.prob <= rep.bound + 1e-8 * std::max(1.0, rep.bound);
    rep.note =
        "premise threshold and conclusion bound are not comparable in general";
    return rep;
}

}  // namespace logconc::prob
