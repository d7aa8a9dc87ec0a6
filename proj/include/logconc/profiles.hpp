#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "logconc/measures.hpp"
#include "logconc/quadrature.hpp"

namespace logconc::profiles {

/// f = c on [0, d], zero beyond.
struct Indicator {
    double c = 1.0;
    double d = 1.0;
};

/// f = c e^{-a t} on [0, d], zero beyond.
struct TruncatedExponential {
    double c = 1.0;
    double a = 1.0;
    double d = 1.0;
};

/// f = c on [0, d], c e^{-rate (t - d)} beyond.
struct PlateauExponential {
    double c = 1.0;
    double d = 0.0;
    double rate = 1.0;
};

/// f = c on [0, d], c ((b - t)/(b - d))^{1/s} on [d, b], zero beyond.
/// b == d is the degenerate pure-plateau member.
struct PlateauPower {
    double c = 1.0;
    double d = 0.0;
    double b = 1.0;
    double s = 1.0;
};

/// f = exp(phi) with phi piecewise linear on the knots, zero past the last knot.
struct LogConcaveSampled {
    std::vector<double> knots;
    std::vector<double> phi;
};

/// f = g^{1/s} with g piecewise linear on the knots, zero past the last knot.
struct SConcaveSampled {
    double s = 1.0;
    std::vector<double> knots;
    std::vector<double> g;
};

using DecreasingProfile =
    std::variant<Indicator, TruncatedExponential, PlateauExponential, PlateauPower,
                 LogConcaveSampled, SConcaveSampled>;

double evaluate(const DecreasingProfile& f, double t);

/// End of the support; +inf for plateau-exponential profiles.
double support_end(const DecreasingProfile& f);

/// Asymptotic exponential decay rate (0 for compactly supported profiles).
double decay_rate(const DecreasingProfile& f);

/// Sorted structural points (plateau edges, knots, finite support end) incl. 0.
std::vector<double> breakpoints(const DecreasingProfile& f);

/// One-sided derivatives of log f at an interior point of the support.
double log_slope_left(const DecreasingProfile& f, double t);
double log_slope_right(const DecreasingProfile& f, double t);

DecreasingProfile scale_amplitude(const DecreasingProfile& f, double k);

struct ProfileStats {
    double V = 0.0;      ///< total mass against the measure
    double u = 0.0;      ///< head mass on [0, h]
    double h = 0.0;
    double ratio = 0.0;  ///< u / V
};

/// int_[a,b] f dmu, split at the profile's breakpoints.
double mass(const DecreasingProfile& f, const measures::WeightedMeasure& mu,
            double a, double b, const QuadratureConfig& cfg = {});

ProfileStats stats(const DecreasingProfile& f, const measures::WeightedMeasure& mu,
                   double h, const QuadratureConfig& cfg = {});

/// Increasing convex weight N on [0, inf); monotonicity and convexity are
/// spot-checked on a 64-point grid at construction.
class ConvexWeight {
public:
    static ConvexWeight power(double q);
    static ConvexWeight cosh_rate(double s);
    /// N(t) = int_0^t dN, dN convex and increasing; N(0) = 0 by construction.
    static ConvexWeight antiderivative(std::function<double(double)> dN,
                                       double growth_rate = 0.0,
                                       std::string label = "antiderivative");
    static ConvexWeight custom(std::function<double(double)> N,
                               double growth_rate = 0.0, std::string label = "custom");

    double operator()(double t) const;
    bool has_derivative() const;
    double derivative(double t) const;
    /// Exponential order (0 for polynomial weights); used for tail divergence checks.
    double growth_rate() const { return growth_; }
    double value_at_origin() const { return (*this)(0.0); }
    const std::string& label() const { return label_; }

private:
    ConvexWeight() = default;
    void spot_check() const;

    std::function<double(double)> fn_;
    std::function<double(double)> dfn_;
    double growth_ = 0.0;
    std::string label_;
};

/// int_0^inf N f dmu.
double weighted_moment(const DecreasingProfile& f, const ConvexWeight& N,
                       const measures::WeightedMeasure& mu,
                       const QuadratureConfig& cfg = {});

struct GenParams {
    double width_scale = 1.0;   ///< typical knot spacing
    double slope_scale = 1.5;   ///< typical potential slope magnitude
    double amplitude_log = 1.0; ///< log f(0) drawn from [-0.5, 1] * this
};

LogConcaveSampled random_logconcave(std::uint64_t seed, int knot_count,
                                    const GenParams& params = {});
SConcaveSampled random_sconcave(std::uint64_t seed, double s, int knot_count,
                                const GenParams& params = {});

struct ValidityReport {
    bool ok = true;
    std::string message;
};

/// Checks monotonicity and concavity of log f (or f^s) by grid differences.
ValidityReport is_valid(const DecreasingProfile& f);

}  // namespace logconc::profiles
