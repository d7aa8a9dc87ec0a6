#include "logconc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace logconc::bounds {

namespace {

using measures::kInfinity;
using profiles::DecreasingProfile;

/// int over the profile's support of g(t, f(t)) dt (Lebesgue), split at the
/// breakpoints; `tail_rate` is the decay rate of the transformed integrand.
double transform_integral(const DecreasingProfile& f,
                          const std::function<double(double, double)>& g,
                          const QuadratureConfig& cfg, double tail_rate) {
    std::vector<double> cuts = profiles::breakpoints(f);
    auto integrand = [&](double t) { return g(t, profiles::evaluate(f, t)); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_adaptive(integrand, cuts[i], cuts[i + 1], cfg).value;
    if (std::isinf(profiles::support_end(f))) {
        if (tail_rate <= 0.0)
            throw std::runtime_error("transform_integral: divergent tail");
        total += integrate_to_infinity(integrand, cuts.back(), cfg, tail_rate).value;
    }
    return total;
}

double second_moment(const DecreasingProfile& f, const QuadratureConfig& cfg) {
    static const profiles::ConvexWeight t2 = profiles::ConvexWeight::power(2.0);
    return profiles::weighted_moment(f, t2, measures::WeightedMeasure{}, cfg);
}

}  // namespace

BoundReport make_report(std::string theorem, Direction dir, double lhs, double rhs,
                        double ratio, double threshold) {
    BoundReport r;
    r.theorem = std::move(theorem);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = ratio;
    r.threshold = threshold;
    r.applicable = ratio <= threshold * (1.0 + 1e-9) + 1e-12;
    r.slack = dir == Direction::Lower ? lhs - rhs : rhs - lhs;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.satisfied = r.slack >= -kCheckTolerance * scale;
    return r;
}

double threshold_bk() { return 0.75; }

double threshold_upper_logconcave() { return 1.0 - std::exp(-std::sqrt(3.0)); }

double threshold_weighted() { return 0.5; }

double sconcave_threshold(double s) {
    if (!(s > 0.0)) throw std::domain_error("sconcave_threshold: s must be positive");
    return 1.0 - std::pow((s + 1.0) / (3.0 * s + 1.0), 1.0 / s + 1.0);
}

namespace {

// k(y) = -log(1-y)/y, increasing from 1 on (0,1); inverse by bisection.
double inverse_k(double z) {
    if (!(z >= 1.0)) throw std::domain_error("inverse_k: z must be >= 1");
    if (z == 1.0) return 0.0;
    auto g = [z](double y) { return -std::log1p(-y) - z * y; };
    double lo = 1e-300, hi = 1.0 - 1e-15;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// The expression under the infimum defining theta_p.
double pnorm_inner(double p, double x) {
    const double one_minus = -std::expm1(p * std::log1p(-x));  // 1 - (1-x)^p
    const double w = std::pow(p * x / one_minus, 1.0 / (p - 1.0));
    return inverse_k(std::max(w, 1.0)) / x;
}

}  // namespace

PnormThreshold pnorm_threshold(double p) {
    if (!(p > 1.0)) throw std::domain_error("pnorm_threshold: p must be > 1");

    // Dense log-spaced grid on (0, 1], then golden-section refinement.
    constexpr int n = 1024;
    const double lo_x = 1e-6;
    double best_x = 1.0, best = kInfinity;
    for (int i = 0; i < n; ++i) {
        const double x = std::exp(std::log(lo_x) * (1.0 - double(i) / (n - 1)));
        const double v = pnorm_inner(p, x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    double a = std::max(lo_x, best_x * std::pow(lo_x, 1.0 / (n - 1)));
    double b = std::min(1.0, best_x * std::pow(lo_x, -1.0 / (n - 1)));
    const double gr = 0.5 * (std::sqrt(5.0) + 1.0);
    double c = b - (b - a) / gr, d = a + (b - a) / gr;
    for (int i = 0; i < 120 && std::abs(b - a) > 1e-14; ++i) {
        if (pnorm_inner(p, c) < pnorm_inner(p, d))
            b = d;
        else
            a = c;
        c = b - (b - a) / gr;
        d = a + (b - a) / gr;
    }
    const double xr = 0.5 * (a + b);
    const double refined = pnorm_inner(p, xr);

    PnormThreshold out;
    out.value = std::min(best, refined);
    out.argmin = refined <= best ? xr : best_x;
    return out;
}

double pnorm_threshold_value(double p) {
    static std::map<double, double> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    const double v = pnorm_threshold(p).value;
    cache.emplace(p, v);
    return v;
}

double hensley_lower(double f0, double V) {
    if (!(f0 > 0.0) || !(V > 0.0))
        throw std::domain_error("hensley_lower: need f0 > 0 and V > 0");
    return V * V * V / (3.0 * f0 * f0);
}

double bk_lower(double h, double u, double V) {
    if (!(h > 0.0) || !(u > 0.0) || !(V >= u))
        throw std::domain_error("bk_lower: need h > 0 and 0 < u <= V");
    return h * h * V * V * V / (3.0 * u * u);
}

double upper_logconcave(double h, double u, double V) {
    if (!(h > 0.0) || !(u > 0.0) || !(V > u))
        throw std::domain_error("upper_logconcave: need h > 0 and 0 < u < V");
    const double log_delta = std::log1p(-u / V);
    return 2.0 * h * h * V / (log_delta * log_delta);
}

double upper_sconcave(double h, double u, double V, double s) {
    if (!(s > 0.0)) throw std::domain_error("upper_sconcave: s must be positive");
    if (!(h > 0.0) || !(u > 0.0) || !(V > u))
        throw std::domain_error("upper_sconcave: need h > 0 and 0 < u < V");
    const double delta = 1.0 - u / V;
    const double one_minus = -std::expm1(s / (s + 1.0) * std::log(delta));
    return 2.0 * h * h * V /
           ((1.0 / s + 2.0) * (1.0 / s + 3.0) * one_minus * one_minus);
}

double power_lower(double q, double h, double u, double V) {
    if (!(q >= 1.0)) throw std::domain_error("power_lower: q must be >= 1");
    if (!(h > 0.0) || !(u > 0.0) || !(V >= u))
        throw std::domain_error("power_lower: need h > 0 and 0 < u <= V");
    return std::pow(h, q) * std::pow(V, q + 1.0) / ((q + 1.0) * std::pow(u, q));
}

double weighted_lower(const profiles::ConvexWeight& N,
                      const measures::WeightedMeasure& mu, double h, double u,
                      double V, const QuadratureConfig& cfg) {
    if (!(h > 0.0) || !(u > 0.0) || !(V >= u))
        throw std::domain_error("weighted_lower: need h > 0 and 0 < u <= V");
    const double phi_h = measures::cdf(mu, h, cfg);
    const double arg = V / u * phi_h;

    // For a decreasing f, (V/u) Phi(h) <= total mass with equality only in the
    // flat limit; map near-total arguments to an unbounded integration range.
    double top;
    if (mu.lambda == 0.0 || arg < mu.total_mass() * (1.0 - 1e-12))
        top = measures::inverse_cdf(mu, arg, cfg);
    else if (arg <= mu.total_mass() * (1.0 + 1e-9))
        top = kInfinity;
    else
        throw std::domain_error("weighted_lower: (V/u) Phi(h) exceeds the total mass");

    const double integral =
        measures::integrate([&N](double t) { return N(t); }, mu, 0.0, top, cfg,
                            -N.growth_rate());
    return u / phi_h * integral;
}

BoundReport check_hensley(const DecreasingProfile& f, double h,
                          const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    const double f0 = profiles::evaluate(f, 0.0);
    return make_report("hensley", Direction::Lower, second_moment(f, cfg),
                       hensley_lower(f0, st.V), st.ratio, 1.0);
}

BoundReport check_bk(const DecreasingProfile& f, double h,
                     const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    return make_report("bk", Direction::Lower, second_moment(f, cfg),
                       bk_lower(h, st.u, st.V), st.ratio, threshold_bk());
}

BoundReport check_upper_logconcave(const DecreasingProfile& f, double h,
                                   const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    const double rhs = st.u < st.V ? upper_logconcave(h, st.u, st.V) : kInfinity;
    return make_report("upper-lc", Direction::Upper, second_moment(f, cfg), rhs,
                       st.ratio, threshold_upper_logconcave());
}

BoundReport check_upper_sconcave(const DecreasingProfile& f, double h, double s,
                                 const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    const double rhs = st.u < st.V ? upper_sconcave(h, st.u, st.V, s) : kInfinity;
    return make_report("upper-sc", Direction::Upper, second_moment(f, cfg), rhs,
                       st.ratio, sconcave_threshold(s));
}

BoundReport check_weighted_lower(const DecreasingProfile& f,
                                 const measures::WeightedMeasure& mu,
                                 const profiles::ConvexWeight& N, double h,
                                 const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, mu, h, cfg);
    const double lhs = profiles::weighted_moment(f, N, mu, cfg);
    double rhs = std::numeric_limits<double>::quiet_NaN();
    try {
        rhs = weighted_lower(N, mu, h, st.u, st.V, cfg);
    } catch (const std::domain_error&) {
        // Beyond the admissible ratio the bound may be undefined; the report
        // stays not-applicable.
    }
    return make_report("weighted", Direction::Lower, lhs, rhs, st.ratio,
                       threshold_weighted());
}

BoundReport check_power_lower(const DecreasingProfile& f, double q, double h,
                              const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    const profiles::ConvexWeight N = profiles::ConvexWeight::power(q);
    const double lhs = profiles::weighted_moment(f, N, measures::WeightedMeasure{},
                                                 cfg);
    return make_report("power", Direction::Lower, lhs, power_lower(q, h, st.u, st.V),
                       st.ratio, threshold_weighted());
}

BoundReport check_pnorm_upper(const DecreasingProfile& f, double p, double h,
                              const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    const double lhs = transform_integral(
        f, [p](double, double fv) { return fv <= 0.0 ? 0.0 : std::pow(fv, p); }, cfg,
        p * profiles::decay_rate(f));
    const double rhs = std::pow(st.u / h, p - 1.0) * st.V;
    return make_report("pnorm", Direction::Upper, lhs, rhs, st.ratio,
                       pnorm_threshold_value(p));
}

BoundReport check_entropy_upper(const DecreasingProfile& f, double h,
                                double ratio_limit, const QuadratureConfig& cfg) {
    const profiles::ProfileStats st = profiles::stats(f, measures::WeightedMeasure{},
                                                      h, cfg);
    const double lhs = transform_integral(
        f, [](double, double fv) { return fv <= 0.0 ? 0.0 : fv * std::log(fv); }, cfg,
        profiles::decay_rate(f));
    const double rhs = std::log(st.u / h) * st.V;
    return make_report("entropy", Direction::Upper, lhs, rhs, st.ratio, ratio_limit);
}

}  // namespace logconc::bounds
