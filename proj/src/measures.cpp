#include "logconc/measures.hpp"

#include <algorithm>
#include <cmath>

namespace logconc::measures {

namespace {

void require_exponent(double p) {
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("weighted measure exponent p must lie in [0, 1)");
}

// Beyond this point the unit-rate integrand t^{-p} e^{-t} contributes less
// than ~1e-17 of the complete mass; the remainder is added analytically.
constexpr double kUnitRateCutoff = 40.0;

double tail_remainder(double p, double x) {
    // int_x^inf t^{-p} e^{-t} dt = x^{-p} e^{-x} (1 - p/x + O(x^{-2})) for large x.
    return std::pow(x, -p) * std::exp(-x) * (1.0 - p / x);
}

// int_0^x t^{-p} e^{-t} dt for finite x with the singularity substituted away:
// t = y^{1/(1-p)} turns it into (1/(1-p)) int_0^{x^{1-p}} e^{-y^{1/(1-p)}} dy.
double lower_incomplete_finite(double p, double x, const QuadratureConfig& cfg) {
    if (x <= 0.0) return 0.0;
    if (p == 0.0) {
        // Substitution is the identity; integrate directly.
        return integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, x, cfg)
            .value;
    }
    const double q = 1.0 - p;
    const double upper = std::pow(x, q);
    auto smooth = [q](double y) { return std::exp(-std::pow(y, 1.0 / q)); };
    return integrate_adaptive(smooth, 0.0, upper, cfg).value / q;
}

}  // namespace

WeightedMeasure::WeightedMeasure(double p_, double lambda_) : p(p_), lambda(lambda_) {
    require_exponent(p);
    if (!(lambda >= 0.0))
        throw std::domain_error("weighted measure rate lambda must be >= 0");
}

double WeightedMeasure::density(double t) const {
    if (t < 0.0) return 0.0;
    if (t == 0.0) return p == 0.0 ? 1.0 : kInfinity;
    return std::pow(t, -p) * std::exp(-lambda * t);
}

double WeightedMeasure::total_mass() const {
    if (lambda == 0.0) return kInfinity;
    return std::pow(lambda, p - 1.0) * complete_mass(p);
}

double lower_incomplete(double p, double x, const QuadratureConfig& cfg) {
    require_exponent(p);
    if (!(x >= 0.0)) throw std::domain_error("lower_incomplete: x must be >= 0");
    if (x >= kUnitRateCutoff)
        return lower_incomplete_finite(p, kUnitRateCutoff, cfg) +
               tail_remainder(p, kUnitRateCutoff) -
               (std::isinf(x) ? 0.0 : tail_remainder(p, x));
    return lower_incomplete_finite(p, x, cfg);
}

double complete_mass(double p, const QuadratureConfig& cfg) {
    return lower_incomplete(p, kInfinity, cfg);
}

double inverse_lower_incomplete(double p, double y, const QuadratureConfig& cfg,
                                double guess) {
    require_exponent(p);
    const double full = complete_mass(p, cfg);
    if (!(y >= 0.0) || y >= full)
        throw std::domain_error("inverse_lower_incomplete: y outside [0, Gamma(1-p))");
    if (y == 0.0) return 0.0;

    // Work in the substituted variable tau = t^{1-p}: there the target
    // function is y(tau) = F_p(tau^{1/(1-p)}) with the bounded derivative
    // e^{-t}/(1-p), so small roots keep their relative scale for p near 1.
    const double q = 1.0 - p;
    auto eval = [&](double tau) {
        return lower_incomplete(p, std::pow(tau, 1.0 / q), cfg);
    };

    // F_p(t) <= t^{1-p}/(1-p), so tau = q y brackets the root from below.
    double lo = q * y;
    double hi = guess > 0.0 ? std::max(std::pow(guess, q), 2.0 * lo) : 2.0 * lo;
    int doublings = 0;
    while (eval(hi) < y) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 200)
            throw QuadratureError("inverse_lower_incomplete: bracketing failed");
    }

    double tau = guess > 0.0 ? std::pow(guess, q) : lo;
    if (!(tau >= lo && tau <= hi)) tau = 0.5 * (lo + hi);

    // Bisection until the bracket is narrow, then Newton with the analytic
    // derivative; fall back to bisection whenever a Newton step leaves the
    // bracket.
    for (int iter = 0; iter < 200; ++iter) {
        const double fy = eval(tau) - y;
        if (std::abs(fy) <= 1e-15 * std::max(y, 1e-12)) break;
        if (fy > 0)
            hi = tau;
        else
            lo = tau;
        const double t = std::pow(tau, 1.0 / q);
        double next = tau - fy * q * std::exp(t);
        const bool newton_ok = std::isfinite(next) && next > lo && next < hi;
        const bool bracket_narrow = hi - lo <= 1e-6 * hi;
        if (!newton_ok || !bracket_narrow) next = 0.5 * (lo + hi);
        const double step = std::abs(next - tau);
        tau = next;
        if (step <= 1e-16 * tau) break;
    }
    return std::pow(tau, 1.0 / q);
}

double cdf(const WeightedMeasure& mu, double t, const QuadratureConfig& cfg) {
    if (!(t >= 0.0)) throw std::domain_error("cdf: t must be >= 0");
    if (mu.lambda == 0.0) return std::pow(t, 1.0 - mu.p) / (1.0 - mu.p);
    return std::pow(mu.lambda, mu.p - 1.0) * lower_incomplete(mu.p, mu.lambda * t, cfg);
}

double inverse_cdf(const WeightedMeasure& mu, double y, const QuadratureConfig& cfg) {
    if (!(y >= 0.0)) throw std::domain_error("inverse_cdf: y must be >= 0");
    if (mu.lambda == 0.0) return std::pow((1.0 - mu.p) * y, 1.0 / (1.0 - mu.p));
    if (y >= mu.total_mass())
        throw std::domain_error("inverse_cdf: y exceeds the total mass of mu");
    return inverse_lower_incomplete(mu.p, std::pow(mu.lambda, 1.0 - mu.p) * y, cfg) /
           mu.lambda;
}

double integrate(const Integrand& g, const WeightedMeasure& mu, double a, double b,
                 const QuadratureConfig& cfg, double decay_hint) {
    if (!(a >= 0.0) || b < a)
        throw std::domain_error("integrate: interval must lie within [0, inf]");
    if (a == b) return 0.0;

    const double p = mu.p;
    const double lambda = mu.lambda;
    double value = 0.0;
    double from = a;

    if (a == 0.0 && p > 0.0) {
        // Substituted leading piece over [0, split].
        const double split = std::isinf(b) ? 1.0 : std::min(b, 1.0);
        const double q = 1.0 - p;
        auto smooth = [&](double y) {
            const double t = std::pow(y, 1.0 / q);
            return g(t) * std::exp(-lambda * t);
        };
        value += integrate_adaptive(smooth, 0.0, std::pow(split, q), cfg).value / q;
        from = split;
        if (from >= b) return value;
    }

    auto weighted = [&](double t) {
        return g(t) * (p == 0.0 ? 1.0 : std::pow(t, -p)) * std::exp(-lambda * t);
    };
    if (std::isinf(b))
        value += integrate_to_infinity(weighted, from, cfg, decay_hint + lambda).value;
    else
        value += integrate_adaptive(weighted, from, b, cfg).value;
    return value;
}

}  // namespace logconc::measures
