#pragma once

#include <limits>

#include "logconc/quadrature.hpp"

namespace logconc::measures {

/// The weight t^{-p} e^{-lambda t} dt on [0, inf), p in [0,1), lambda >= 0.
struct WeightedMeasure {
    double p = 0.0;
    double lambda = 0.0;

    WeightedMeasure() = default;
    WeightedMeasure(double p_, double lambda_);

    bool is_lebesgue() const { return p == 0.0 && lambda == 0.0; }
    double density(double t) const;
    /// Finite iff lambda > 0.
    double total_mass() const;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// F_p(x) = int_0^x t^{-p} e^{-t} dt. x may be +inf, giving the complete value.
double lower_incomplete(double p, double x, const QuadratureConfig& cfg = {});

/// F_p(+inf), i.e. the complete integral of t^{-p} e^{-t}.
double complete_mass(double p, const QuadratureConfig& cfg = {});

/// G_p = F_p^{-1}: the unique t >= 0 with lower_incomplete(p, t) = y.
/// `guess`, when positive, warm-starts the safeguarded Newton iteration.
double inverse_lower_incomplete(double p, double y, const QuadratureConfig& cfg = {},
                                double guess = -1.0);

/// Phi_{p,lambda}(t), the measure of [0, t].
double cdf(const WeightedMeasure& mu, double t, const QuadratureConfig& cfg = {});

/// Phi_{p,lambda}^{-1}(y); domain error if y exceeds the total mass.
double inverse_cdf(const WeightedMeasure& mu, double y,
                   const QuadratureConfig& cfg = {});

/// int_[a,b] g dmu. The t^{-p} endpoint singularity at a == 0 is removed by the
/// substitution t = y^{1/(1-p)} before quadrature. b may be +inf; `decay_hint`
/// (exponential rate of g, if known) speeds up the tail search.
double integrate(const Integrand& g, const WeightedMeasure& mu, double a, double b,
                 const QuadratureConfig& cfg = {}, double decay_hint = 0.0);

}  // namespace logconc::measures
