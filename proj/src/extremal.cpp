#include "logconc/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "logconc/bounds.hpp"

namespace logconc::extremal {

namespace {

using measures::kInfinity;
using measures::WeightedMeasure;
using profiles::DecreasingProfile;

constexpr double kMassMatchTol = 1e-12;

void require_unit_interval(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error("Delta must lie in (0, 1)");
}

double bisect(const std::function<double(double)>& g, double lo, double hi,
              double g_scale, int iters = 120) {
    // g(lo) >= 0 >= g(hi) assumed (clamped when violated by round-off).
    double flo = g(lo);
    if (flo < 0.0) return lo;
    double fhi = g(hi);
    if (fhi > 0.0) return hi;
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if (std::abs(fm) <= 1e-13 * g_scale) return mid;
        (fm >= 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-14 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

struct HeadTail {
    profiles::ProfileStats st;
    double fh = 0.0;
};

HeadTail reduction_setup(const DecreasingProfile& f, const WeightedMeasure& mu,
                         double h, const QuadratureConfig& cfg, const char* who) {
    if (!(h > 0.0)) throw std::domain_error(std::string(who) + ": h must be positive");
    HeadTail ht;
    ht.st = profiles::stats(f, mu, h, cfg);
    ht.fh = profiles::evaluate(f, h);
    if (!(ht.st.V - ht.st.u > 1e-12 * ht.st.V) || !(ht.fh > 0.0))
        throw std::invalid_argument(std::string(who) +
                                    ": degenerate input (u = V or f(h) = 0)");
    return ht;
}

}  // namespace

double objective_upper_logconcave(double x, double delta) {
    require_unit_interval(delta);
    if (!(x >= 0.0)) throw std::domain_error("objective: x must be >= 0");
    const double denom = x - std::log(delta * (x + 1.0));
    if (!(denom > 0.0))
        throw std::domain_error("objective: Delta (x+1) must stay below e^x");
    const double numer = ((x + 3.0) * x + 6.0) * x + 6.0;
    return numer / (3.0 * (x + 1.0) * denom * denom);
}

double objective_upper_sconcave(double x, double delta, double s) {
    require_unit_interval(delta);
    if (!(x >= 0.0)) throw std::domain_error("objective: x must be >= 0");
    if (!(s > 0.0)) throw std::domain_error("objective: s must be positive");
    const double m = 1.0 / s + 1.0;
    const double denom =
        x + 1.0 - std::pow(delta * (x * m + 1.0), s / (s + 1.0));
    if (!(denom > 0.0)) throw std::domain_error("objective: nonpositive denominator");

    // int_0^1 (1 + x - t)^2 t^{1/s} dt by three Beta moments.
    const double A = 1.0 + x;
    const double inner = A * A / (1.0 / s + 1.0) - 2.0 * A / (1.0 / s + 2.0) +
                         1.0 / (1.0 / s + 3.0);

    const double plateau = x * m / (x * m + 1.0) / 3.0 * x * x;
    const double tail = m / (x * m + 1.0) * inner;
    return (plateau + tail) / (denom * denom);
}

profiles::PlateauExponential family_member_upper_logconcave(double x, double delta,
                                                            double h, double V) {
    require_unit_interval(delta);
    if (!(h > 0.0) || !(V > 0.0))
        throw std::domain_error("family member: need h > 0 and V > 0");
    // Plateau end d = x/rate must not pass h.
    if (!(delta * (x + 1.0) <= 1.0 + 1e-12))
        throw std::domain_error("family member: x beyond (1 - Delta)/Delta");
    const double rate = (x - std::log(delta * (x + 1.0))) / h;
    if (!(rate > 0.0)) throw std::domain_error("family member: invalid parameters");
    return profiles::PlateauExponential{rate * V / (x + 1.0), x / rate, rate};
}

profiles::PlateauPower family_member_upper_sconcave(double x, double delta, double s,
                                                    double h, double V) {
    require_unit_interval(delta);
    if (!(h > 0.0) || !(V > 0.0) || !(s > 0.0))
        throw std::domain_error("family member: invalid parameters");
    const double m = 1.0 / s + 1.0;
    if (!(delta * (x * m + 1.0) <= 1.0 + 1e-12))
        throw std::domain_error("family member: x beyond the plateau-end constraint");
    const double rate =
        (x + 1.0 - std::pow(delta * (x * m + 1.0), s / (s + 1.0))) / h;
    if (!(rate > 0.0)) throw std::domain_error("family member: invalid parameters");
    const double d = x / rate;
    return profiles::PlateauPower{rate * m * V / (x * m + 1.0), d, d + 1.0 / rate, s};
}

std::pair<double, double> weighted_objective_domain(const WeightedMeasure& mu,
                                                    double u, double V, double h,
                                                    const QuadratureConfig& cfg) {
    if (!(u > 0.0) || !(V > 0.0) || !(h > 0.0))
        throw std::domain_error("weighted_objective: need positive u, V, h");
    const double lo =
        V / u * measures::lower_incomplete(mu.p, mu.lambda * h, cfg);
    return {lo, measures::complete_mass(mu.p, cfg)};
}

double weighted_objective(const profiles::ConvexWeight& N, const WeightedMeasure& mu,
                          double u, double V, double h, double x,
                          const QuadratureConfig& cfg) {
    if (!(u > 0.0) || !(u <= 0.5 * V * (1.0 + 1e-12)))
        throw std::domain_error("weighted_objective: need 0 < u <= V/2");
    const auto [lo, hi] = weighted_objective_domain(mu, u, V, h, cfg);
    if (x < lo * (1.0 - 1e-9) || x >= hi)
        throw std::domain_error("weighted_objective: x outside the admissible interval");

    const double p = mu.p;
    const double r = u / V;
    if (x <= 0.0) {
        // lambda == 0 endpoint: G_p(tx)/G_p(ux) -> (t/u)^{1/(1-p)}.
        const double value = integrate_adaptive(
                                 [&](double w) {
                                     return N(h * std::pow(w, 1.0 / (1.0 - p)));
                                 },
                                 0.0, V / u, cfg)
                                 .value;
        return u * value;
    }

    const double g_head = measures::inverse_lower_incomplete(p, r * x, cfg);
    const double g_full = measures::inverse_lower_incomplete(p, x, cfg);
    const WeightedMeasure unit{p, 1.0};
    const double integral = measures::integrate(
        [&](double sigma) { return N(h * sigma / g_head); }, unit, 0.0, g_full, cfg);
    return V / x * integral;
}

profiles::PlateauExponential reduce_upper_logconcave(const DecreasingProfile& f,
                                                     const WeightedMeasure& mu,
                                                     double h,
                                                     const QuadratureConfig& cfg) {
    const HeadTail ht = reduction_setup(f, mu, h, cfg, "reduce_upper_logconcave");
    const double tail = ht.st.V - ht.st.u;
    const double fh = ht.fh;

    auto tail_mass = [&](double rate) -> double {
        if (rate + mu.lambda <= 0.0) return kInfinity;
        if (mu.is_lebesgue()) return fh / rate;
        return measures::integrate(
            [&](double t) { return fh * std::exp(-rate * (t - h)); }, mu, h,
            kInfinity, cfg, rate);
    };

    // Tail matching: rate in [-phi'_+(h), R], R doubled until the sign changes.
    double lo = std::max(0.0, -profiles::log_slope_right(f, h));
    if (tail_mass(lo) < tail * (1.0 - 1e-9))
        throw std::runtime_error(
            "reduce_upper_logconcave: tail bracket failed (input not log-concave?)");
    double hi = std::max(2.0 * lo, 1.0 / h);
    int guard = 0;
    while (tail_mass(hi) > tail) {
        hi *= 2.0;
        if (++guard > 200)
            throw std::runtime_error("reduce_upper_logconcave: no tail bracket");
    }
    const double rate =
        bisect([&](double q) { return tail_mass(q) - tail; }, lo, hi, ht.st.V);

    // Head matching: d in [0, h], head mass decreasing in d.
    auto head_mass = [&](double d) {
        const double level = fh * std::exp(rate * (h - d));
        double plateau = 0.0, slope_part = 0.0;
        if (d > 0.0) plateau = level * measures::cdf(mu, d, cfg);
        if (d < h) {
            if (mu.is_lebesgue())
                slope_part = fh * std::expm1(rate * (h - d)) / rate;
            else
                slope_part = measures::integrate(
                    [&](double t) { return fh * std::exp(rate * (h - t)); }, mu, d, h,
                    cfg);
        }
        return plateau + slope_part;
    };
    const double d = rate * h < 1e-12
                         ? h
                         : bisect([&](double dd) { return head_mass(dd) - ht.st.u; },
                                  0.0, h, ht.st.V);

    return profiles::PlateauExponential{fh * std::exp(rate * (h - d)), d, rate};
}

profiles::TruncatedExponential reduce_lower(const DecreasingProfile& f,
                                            const WeightedMeasure& mu, double h,
                                            const QuadratureConfig& cfg) {
    const HeadTail ht = reduction_setup(f, mu, h, cfg, "reduce_lower");
    const double tail = ht.st.V - ht.st.u;
    const double fh = ht.fh;

    // Slope matching on [0, h]: head mass runs from f(h) mu([0,h]) at w = 0 up
    // to >= u at w = phi'_-(h).
    auto head_mass = [&](double w) {
        if (mu.is_lebesgue())
            return w == 0.0 ? fh * h : fh * -std::expm1(w * -h) / w;
        return measures::integrate(
            [&](double t) { return fh * std::exp(w * (t - h)); }, mu, 0.0, h, cfg);
    };
    double w_lo = profiles::log_slope_left(f, h);
    if (!std::isfinite(w_lo)) w_lo = -1e6 / h;
    if (head_mass(w_lo) < ht.st.u * (1.0 - 1e-9))
        throw std::runtime_error(
            "reduce_lower: head bracket failed (input not log-concave?)");
    const double w =
        bisect([&](double ww) { return head_mass(ww) - ht.st.u; }, w_lo, 0.0,
               ht.st.V);

    // Cutoff matching on [h, v]: mass increasing in v.
    auto tail_mass = [&](double v) {
        if (mu.is_lebesgue())
            return w == 0.0 ? fh * (v - h) : fh * std::expm1(w * (v - h)) / w;
        return measures::integrate(
            [&](double t) { return fh * std::exp(w * (t - h)); }, mu, h, v, cfg);
    };
    double v = 2.0 * h;
    double prev = h;
    int guard = 0;
    while (tail_mass(v) < tail) {
        prev = v;
        v *= 2.0;
        if (++guard > 100) break;
    }
    double d;
    if (tail_mass(v) >= tail) {
        d = bisect([&](double vv) { return tail - tail_mass(vv); }, prev, v, ht.st.V);
    } else if (tail - tail_mass(v) <= 1e-10 * ht.st.V) {
        d = v;  // the matched member is the full exponential; cut where the
                // remaining mass is negligible
    } else {
        throw std::runtime_error("reduce_lower: cutoff bracket failed");
    }

    return profiles::TruncatedExponential{fh * std::exp(-w * h), -w, d};
}

profiles::PlateauPower reduce_upper_sconcave(const DecreasingProfile& f,
                                             const WeightedMeasure& mu, double h,
                                             double s, const QuadratureConfig& cfg) {
    if (!(s > 0.0)) throw std::domain_error("reduce_upper_sconcave: s must be > 0");
    const double b_f = profiles::support_end(f);
    if (std::isinf(b_f))
        throw std::invalid_argument("reduce_upper_sconcave: f must have compact support");
    const HeadTail ht = reduction_setup(f, mu, h, cfg, "reduce_upper_sconcave");
    const double tail = ht.st.V - ht.st.u;
    const double fh = ht.fh;

    // Pure-plateau degenerate branch: f constant on the whole support.
    {
        const double plateau_tail = fh * (measures::cdf(mu, b_f, cfg) -
                                          measures::cdf(mu, h, cfg));
        const double plateau_head = fh * measures::cdf(mu, h, cfg);
        if (std::abs(plateau_tail - tail) <= kMassMatchTol * ht.st.V &&
            std::abs(plateau_head - ht.st.u) <= kMassMatchTol * ht.st.V)
            return profiles::PlateauPower{fh, b_f, b_f, s};
    }

    // Tail matching over the untruncated family: the member decays as
    // fh (1 - rho (t-h))^{1/s} down to zero at h + 1/rho.
    auto tail_mass = [&](double rho) {
        if (mu.is_lebesgue()) return fh * s / ((s + 1.0) * rho);
        // Substitution z = (1 - rho(t-h))^{(s+1)/s} turns the power factor
        // into a constant times dz.
        const double c = s / (s + 1.0);
        return fh / rho * c *
               integrate_adaptive(
                   [&](double z) {
                       const double t = h + (1.0 - std::pow(z, c)) / rho;
                       return mu.density(t);
                   },
                   0.0, 1.0, cfg)
                   .value;
    };
    double rho_hi = 1.0 / (b_f - h);
    int guard = 0;
    while (tail_mass(rho_hi) > tail) {
        rho_hi *= 2.0;
        if (++guard > 200)
            throw std::runtime_error("reduce_upper_sconcave: no tail bracket");
    }
    double rho_lo = rho_hi;
    guard = 0;
    while (tail_mass(rho_lo) < tail) {
        rho_lo *= 0.5;
        if (++guard > 200)
            throw std::runtime_error("reduce_upper_sconcave: no tail bracket");
    }
    const double rho = bisect([&](double r) { return tail_mass(r) - tail; }, rho_lo,
                              rho_hi, ht.st.V);

    // Head matching: d in [0, h], level fh (1 + rho (h-d))^{1/s}.
    auto head_mass = [&](double d) {
        const double level = fh * std::pow(1.0 + rho * (h - d), 1.0 / s);
        double value = d > 0.0 ? level * measures::cdf(mu, d, cfg) : 0.0;
        if (d < h)
            value += measures::integrate(
                [&](double t) {
                    return fh * std::pow(1.0 + rho * (h - t), 1.0 / s);
                },
                mu, d, h, cfg);
        return value;
    };
    const double d =
        bisect([&](double dd) { return head_mass(dd) - ht.st.u; }, 0.0, h, ht.st.V);

    const double level = fh * std::pow(1.0 + rho * (h - d), 1.0 / s);
    return profiles::PlateauPower{level, d, h + 1.0 / rho, s};
}

std::vector<double> make_sweep_grid(double x_min, double x_max, int steps) {
    if (!(x_max > x_min) || steps < 2)
        throw std::invalid_argument("make_sweep_grid: need x_max > x_min, steps >= 2");
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(steps));
    xs.push_back(x_min);
    const double lo = std::max(x_min, (x_max - x_min) * 1e-6);
    for (int i = 1; i < steps; ++i) {
        const double f = double(i - 1) / (steps - 2 > 0 ? steps - 2 : 1);
        xs.push_back(lo * std::pow(x_max / lo, f));
    }
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

SweepResult sweep(const std::function<double(double)>& objective,
                  const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("sweep: empty grid");
    SweepResult out;
    out.rows.reserve(xs.size());
    for (double x : xs) out.rows.push_back({x, objective(x)});

    out.argmax = out.argmin = out.rows.front().x;
    out.max_value = out.min_value = out.rows.front().value;
    for (const SweepRow& row : out.rows) {
        if (row.value > out.max_value) {
            out.max_value = row.value;
            out.argmax = row.x;
        }
        if (row.value < out.min_value) {
            out.min_value = row.value;
            out.argmin = row.x;
        }
    }
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        const double a = out.rows[i - 1].value, b = out.rows[i].value;
        const double tol = 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
        if (b > a + tol) out.nonincreasing = false;
        if (b < a - tol) out.nondecreasing = false;
    }
    return out;
}

}  // namespace logconc::extremal
