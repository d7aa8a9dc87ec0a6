#pragma once

// Test-side oracles, deliberately independent of the library's quadrature and
// root-finding paths: composite Simpson integration and plain bisection.

#include <cmath>
#include <functional>

#include "logconc/profiles.hpp"

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n = 4096) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// Simpson on [a, inf) for integrands decaying at exponential rate >= rate.
inline double simpson_to_inf(const std::function<double(double)>& f, double a,
                             double rate, int n = 4096) {
    const double cutoff = a + 45.0 / rate;
    return simpson(f, a, cutoff, n);
}

inline double bisect_root(const std::function<double(double)>& g, double lo,
                          double hi, int iters = 200) {
    const bool rising = g(hi) > g(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool below = g(mid) < 0.0;
        if (below == rising)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Analytic Lebesgue masses of the closed-form profile variants.
inline double analytic_mass(const logconc::profiles::DecreasingProfile& f) {
    using namespace logconc::profiles;
    if (const auto* v = std::get_if<Indicator>(&f)) return v->c * v->d;
    if (const auto* v = std::get_if<TruncatedExponential>(&f))
        return v->a == 0.0 ? v->c * v->d : v->c / v->a * -std::expm1(-v->a * v->d);
    if (const auto* v = std::get_if<PlateauExponential>(&f))
        return v->c * v->d + v->c / v->rate;
    if (const auto* v = std::get_if<PlateauPower>(&f))
        return v->c * v->d + v->c * (v->b - v->d) / (1.0 / v->s + 1.0);
    throw std::logic_error("analytic_mass: sampled variant");
}

}  // namespace oracle
