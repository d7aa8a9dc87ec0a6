#include "logconc/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace logconc::profiles {

namespace {

using measures::kInfinity;

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double t) {
    if (t <= xs.front()) return ys.front();
    auto it = std::upper_bound(xs.begin(), xs.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    if (i >= xs.size()) return ys.back();
    const double w = (t - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

double segment_slope(const std::vector<double>& xs, const std::vector<double>& ys,
                     double t, bool left) {
    // Slope of the segment containing t; `left` picks the segment ending at t
    // when t is a knot.
    std::size_t i;
    if (left)
        i = static_cast<std::size_t>(
            std::lower_bound(xs.begin(), xs.end(), t) - xs.begin());
    else
        i = static_cast<std::size_t>(
            std::upper_bound(xs.begin(), xs.end(), t) - xs.begin());
    i = std::clamp<std::size_t>(i, 1, xs.size() - 1);
    return (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
}

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

double evaluate(const DecreasingProfile& f, double t) {
    if (t < 0.0) return 0.0;
    return std::visit(
        [t](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                return t <= v.d ? v.c : 0.0;
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return t <= v.d ? v.c * std::exp(-v.a * t) : 0.0;
            } else if constexpr (std::is_same_v<T, PlateauExponential>) {
                return t <= v.d ? v.c : v.c * std::exp(-v.rate * (t - v.d));
            } else if constexpr (std::is_same_v<T, PlateauPower>) {
                if (t <= v.d) return v.c;
                if (t >= v.b) return 0.0;
                return v.c * std::pow((v.b - t) / (v.b - v.d), 1.0 / v.s);
            } else if constexpr (std::is_same_v<T, LogConcaveSampled>) {
                if (t > v.knots.back()) return 0.0;
                return std::exp(interp(v.knots, v.phi, t));
            } else {
                if (t > v.knots.back()) return 0.0;
                const double g = interp(v.knots, v.g, t);
                return g <= 0.0 ? 0.0 : std::pow(g, 1.0 / v.s);
            }
        },
        f);
}

double support_end(const DecreasingProfile& f) {
    return std::visit(
        [](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indicator>) return v.d;
            else if constexpr (std::is_same_v<T, TruncatedExponential>) return v.d;
            else if constexpr (std::is_same_v<T, PlateauExponential>) return kInfinity;
            else if constexpr (std::is_same_v<T, PlateauPower>) return v.b;
            else return v.knots.back();
        },
        f);
}

double decay_rate(const DecreasingProfile& f) {
    if (const auto* pe = std::get_if<PlateauExponential>(&f)) return pe->rate;
    return 0.0;
}

std::vector<double> breakpoints(const DecreasingProfile& f) {
    std::vector<double> pts{0.0};
    std::visit(
        [&pts](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                pts.push_back(v.d);
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                pts.push_back(v.d);
            } else if constexpr (std::is_same_v<T, PlateauExponential>) {
                pts.push_back(v.d);
            } else if constexpr (std::is_same_v<T, PlateauPower>) {
                pts.push_back(v.d);
                pts.push_back(v.b);
            } else {
                pts.insert(pts.end(), v.knots.begin(), v.knots.end());
            }
        },
        f);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

double log_slope(const DecreasingProfile& f, double t, bool left) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                (void)v;
                return 0.0;
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return -v.a;
            } else if constexpr (std::is_same_v<T, PlateauExponential>) {
                if (t < v.d || (left && t == v.d)) return 0.0;
                return -v.rate;
            } else if constexpr (std::is_same_v<T, PlateauPower>) {
                if (t < v.d || (left && t == v.d)) return 0.0;
                return -1.0 / (v.s * (v.b - t));
            } else if constexpr (std::is_same_v<T, LogConcaveSampled>) {
                return segment_slope(v.knots, v.phi, t, left);
            } else {
                const double g = interp(v.knots, v.g, t);
                if (g <= 0.0) return -kInfinity;
                return segment_slope(v.knots, v.g, t, left) / (v.s * g);
            }
        },
        f);
}

}  // namespace

double log_slope_left(const DecreasingProfile& f, double t) {
    return log_slope(f, t, true);
}

double log_slope_right(const DecreasingProfile& f, double t) {
    return log_slope(f, t, false);
}

DecreasingProfile scale_amplitude(const DecreasingProfile& f, double k) {
    if (!(k > 0.0)) throw std::domain_error("scale_amplitude: k must be positive");
    DecreasingProfile out = f;
    std::visit(
        [k](auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LogConcaveSampled>) {
                const double shift = std::log(k);
                for (double& p : v.phi) p += shift;
            } else if constexpr (std::is_same_v<T, SConcaveSampled>) {
                const double factor = std::pow(k, v.s);
                for (double& g : v.g) g *= factor;
            } else {
                v.c *= k;
            }
        },
        out);
    return out;
}

double mass(const DecreasingProfile& f, const measures::WeightedMeasure& mu,
            double a, double b, const QuadratureConfig& cfg) {
    if (!(a >= 0.0) || b < a)
        throw std::domain_error("mass: interval must lie within [0, inf]");
    const double end = support_end(f);
    std::vector<double> pts = breakpoints(f);
    const double hi = std::min(b, end);
    if (hi <= a) return 0.0;

    std::vector<double> cuts{a};
    for (double p : pts)
        if (p > a && p < hi && std::isfinite(p)) cuts.push_back(p);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto g = [&f](double t) { return evaluate(f, t); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (std::isinf(cuts[i + 1])) {
            if (decay_rate(f) + mu.lambda <= 0.0)
                throw std::runtime_error("mass: divergent integral (no decay)");
            total += measures::integrate(g, mu, cuts[i], kInfinity, cfg, decay_rate(f));
        } else {
            total += measures::integrate(g, mu, cuts[i], cuts[i + 1], cfg);
        }
    }
    return total;
}

ProfileStats stats(const DecreasingProfile& f, const measures::WeightedMeasure& mu,
                   double h, const QuadratureConfig& cfg) {
    if (!(h > 0.0)) throw std::domain_error("stats: h must be positive");
    ProfileStats st;
    st.h = h;
    st.u = mass(f, mu, 0.0, h, cfg);
    st.V = st.u + mass(f, mu, h, kInfinity, cfg);
    if (st.u > st.V) st.u = st.V;
    st.ratio = st.u / st.V;
    return st;
}

ConvexWeight ConvexWeight::power(double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("ConvexWeight::power: q must be >= 1");
    ConvexWeight w;
    w.fn_ = [q](double t) { return std::pow(t, q); };
    w.dfn_ = [q](double t) { return q == 1.0 ? 1.0 : q * std::pow(t, q - 1.0); };
    w.label_ = "t^" + std::to_string(q);
    w.spot_check();
    return w;
}

ConvexWeight ConvexWeight::cosh_rate(double s) {
    if (!(s > 0.0))
        throw std::invalid_argument("ConvexWeight::cosh_rate: s must be positive");
    ConvexWeight w;
    w.fn_ = [s](double t) { return std::cosh(s * t); };
    w.dfn_ = [s](double t) { return s * std::sinh(s * t); };
    w.growth_ = s;
    w.label_ = "cosh(" + std::to_string(s) + " t)";
    w.spot_check();
    return w;
}

ConvexWeight ConvexWeight::antiderivative(std::function<double(double)> dN,
                                          double growth_rate, std::string label) {
    ConvexWeight w;
    w.dfn_ = dN;
    w.fn_ = [dN](double t) {
        if (t == 0.0) return 0.0;
        QuadratureConfig cfg;
        cfg.rel_tol = 1e-12;
        return integrate_adaptive(dN, 0.0, t, cfg).value;
    };
    w.growth_ = growth_rate;
    w.label_ = std::move(label);
    w.spot_check();
    return w;
}

ConvexWeight ConvexWeight::custom(std::function<double(double)> N, double growth_rate,
                                  std::string label) {
    ConvexWeight w;
    w.fn_ = std::move(N);
    w.growth_ = growth_rate;
    w.label_ = std::move(label);
    w.spot_check();
    return w;
}

double ConvexWeight::operator()(double t) const { return fn_(t); }

bool ConvexWeight::has_derivative() const { return static_cast<bool>(dfn_); }

double ConvexWeight::derivative(double t) const {
    if (!dfn_) throw std::logic_error("ConvexWeight: no derivative available");
    return dfn_(t);
}

void ConvexWeight::spot_check() const {
    constexpr int n = 64;
    constexpr double span = 10.0;
    double prev = 0.0, prev2 = 0.0, scale = 1.0;
    for (int i = 0; i < n; ++i) {
        const double t = span * i / (n - 1);
        const double v = fn_(t);
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("ConvexWeight: N must be finite and >= 0");
        scale = std::max(scale, std::abs(v));
        if (i >= 1 && v < prev - 1e-9 * scale)
            throw std::invalid_argument("ConvexWeight: N is not increasing");
        if (i >= 2 && v - 2.0 * prev + prev2 < -1e-9 * scale)
            throw std::invalid_argument("ConvexWeight: N is not convex");
        prev2 = prev;
        prev = v;
    }
}

double weighted_moment(const DecreasingProfile& f, const ConvexWeight& N,
                       const measures::WeightedMeasure& mu,
                       const QuadratureConfig& cfg) {
    const double end = support_end(f);
    if (std::isinf(end) && decay_rate(f) + mu.lambda <= N.growth_rate())
        throw std::runtime_error("weighted_moment: divergent integral");

    std::vector<double> cuts = breakpoints(f);
    auto g = [&](double t) { return N(t) * evaluate(f, t); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += measures::integrate(g, mu, cuts[i], cuts[i + 1], cfg);
    if (std::isinf(end))
        total += measures::integrate(g, mu, cuts.back(), kInfinity, cfg,
                                     decay_rate(f) - N.growth_rate());
    return total;
}

LogConcaveSampled random_logconcave(std::uint64_t seed, int knot_count,
                                    const GenParams& params) {
    if (knot_count < 2)
        throw std::invalid_argument("random_logconcave: knot_count must be >= 2");
    std::mt19937_64 eng(seed);
    LogConcaveSampled out;
    out.knots.resize(static_cast<std::size_t>(knot_count));
    out.phi.resize(out.knots.size());

    out.knots[0] = 0.0;
    for (std::size_t i = 1; i < out.knots.size(); ++i)
        out.knots[i] = out.knots[i - 1] + params.width_scale * (0.15 + uniform01(eng));

    out.phi[0] = params.amplitude_log * (1.5 * uniform01(eng) - 0.5);
    double slope = -params.slope_scale * uniform01(eng);
    for (std::size_t i = 1; i < out.knots.size(); ++i) {
        out.phi[i] = out.phi[i - 1] + slope * (out.knots[i] - out.knots[i - 1]);
        slope -= params.slope_scale * (0.1 + uniform01(eng));
    }
    return out;
}

SConcaveSampled random_sconcave(std::uint64_t seed, double s, int knot_count,
                                const GenParams& params) {
    if (!(s > 0.0)) throw std::invalid_argument("random_sconcave: s must be positive");
    if (knot_count < 2)
        throw std::invalid_argument("random_sconcave: knot_count must be >= 2");
    std::mt19937_64 eng(seed);
    SConcaveSampled out;
    out.s = s;
    out.knots.push_back(0.0);
    out.g.push_back(0.5 + 2.0 * uniform01(eng));

    double slope = -params.slope_scale * (0.1 + uniform01(eng));
    for (int i = 1; i + 1 < knot_count; ++i) {
        const double gap = params.width_scale * (0.15 + uniform01(eng));
        const double next = out.g.back() + slope * gap;
        if (next <= 0.0) break;
        out.knots.push_back(out.knots.back() + gap);
        out.g.push_back(next);
        slope -= params.slope_scale * (0.1 + uniform01(eng));
    }
    // Close the support with the zero crossing of the final slope.
    out.knots.push_back(out.knots.back() - out.g.back() / slope);
    out.g.push_back(0.0);
    return out;
}

namespace {

ValidityReport fail(const std::string& msg) { return {false, msg}; }

ValidityReport check_sequences(const std::vector<double>& xs,
                               const std::vector<double>& ys, const char* what) {
    if (xs.size() != ys.size() || xs.size() < 2)
        return fail(std::string(what) + ": need matching knots/values, >= 2 of each");
    double scale = 1.0;
    for (double y : ys) scale = std::max(scale, std::abs(y));
    double prev_slope = kInfinity;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1]))
            return fail(std::string(what) + ": knots must be strictly increasing");
        const double slope = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
        std::ostringstream seg;
        seg << " on [" << xs[i - 1] << ", " << xs[i] << "]";
        if (slope > 1e-9 * scale)
            return fail(std::string(what) + ": increasing segment" + seg.str());
        if (slope > prev_slope + 1e-9 * scale)
            return fail(std::string(what) + ": convex kink" + seg.str());
        prev_slope = slope;
    }
    return {};
}

}  // namespace

ValidityReport is_valid(const DecreasingProfile& f) {
    return std::visit(
        [&](const auto& v) -> ValidityReport {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                if (!(v.c >= 0.0) || !(v.d > 0.0))
                    return fail("Indicator: need c >= 0 and d > 0");
                return {};
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                if (!(v.c >= 0.0) || !(v.a >= 0.0) || !(v.d > 0.0))
                    return fail("TruncatedExponential: need c, a >= 0 and d > 0");
                return {};
            } else if constexpr (std::is_same_v<T, PlateauExponential>) {
                if (!(v.c >= 0.0) || !(v.d >= 0.0) || !(v.rate >= 0.0))
                    return fail("PlateauExponential: need c, d, rate >= 0");
                return {};
            } else if constexpr (std::is_same_v<T, PlateauPower>) {
                if (!(v.c >= 0.0) || !(v.d >= 0.0) || !(v.b >= v.d) || !(v.s > 0.0))
                    return fail("PlateauPower: need c >= 0, 0 <= d <= b, s > 0");
                return {};
            } else if constexpr (std::is_same_v<T, LogConcaveSampled>) {
                return check_sequences(v.knots, v.phi, "LogConcaveSampled");
            } else {
                if (!(v.s > 0.0)) return fail("SConcaveSampled: s must be positive");
                for (double g : v.g)
                    if (!(g >= 0.0))
                        return fail("SConcaveSampled: g must be nonnegative");
                return check_sequences(v.knots, v.g, "SConcaveSampled");
            }
        },
        f);
}

}  // namespace logconc::profiles
