#pragma once

#include <string>

#include "logconc/measures.hpp"
#include "logconc/profiles.hpp"

namespace logconc::bounds {

/// Relative tolerance at which a checked inequality counts as satisfied.
inline constexpr double kCheckTolerance = 1e-8;

enum class Direction { Lower, Upper };

/// Outcome of comparing a quadrature oracle value against a theorem bound.
/// slack is direction-aware: positive means the inequality holds strictly,
/// for lower and upper bounds alike.
struct BoundReport {
    std::string theorem;
    double lhs = 0.0;        ///< oracle functional value
    double rhs = 0.0;        ///< theorem bound
    double ratio = 0.0;      ///< u / V
    double threshold = 1.0;  ///< admissible ratio
    bool applicable = false;
    bool satisfied = false;
    double slack = 0.0;
};

BoundReport make_report(std::string theorem, Direction dir, double lhs, double rhs,
                        double ratio, double threshold);

// Admissible head/total ratios of the theorems.
double threshold_bk();               // 3/4
double threshold_upper_logconcave(); // 1 - e^{-sqrt(3)}
double threshold_weighted();         // 1/2
double sconcave_threshold(double s); // delta_s
struct PnormThreshold {
    double value = 0.0;
    double argmin = 0.0;  ///< grid/golden-section minimiser in (0, 1]
};
PnormThreshold pnorm_threshold(double p);
double pnorm_threshold_value(double p);  ///< cached

// Bound values as pure functions of the head/total data.
double hensley_lower(double f0, double V);
double bk_lower(double h, double u, double V);
double upper_logconcave(double h, double u, double V);
double upper_sconcave(double h, double u, double V, double s);
double power_lower(double q, double h, double u, double V);
double weighted_lower(const profiles::ConvexWeight& N,
                      const measures::WeightedMeasure& mu, double h, double u,
                      double V, const QuadratureConfig& cfg = {});

// Checkers: pair a profile with the quadrature oracle and emit a report.
BoundReport check_hensley(const profiles::DecreasingProfile& f, double h,
                          const QuadratureConfig& cfg = {});
BoundReport check_bk(const profiles::DecreasingProfile& f, double h,
                     const QuadratureConfig& cfg = {});
BoundReport check_upper_logconcave(const profiles::DecreasingProfile& f, double h,
                                   const QuadratureConfig& cfg = {});
BoundReport check_upper_sconcave(const profiles::DecreasingProfile& f, double h,
                                 double s, const QuadratureConfig& cfg = {});
BoundReport check_weighted_lower(const profiles::DecreasingProfile& f,
                                 const measures::WeightedMeasure& mu,
                                 const profiles::ConvexWeight& N, double h,
                                 const QuadratureConfig& cfg = {});
BoundReport check_power_lower(const profiles::DecreasingProfile& f, double q,
                              double h, const QuadratureConfig& cfg = {});
BoundReport check_pnorm_upper(const profiles::DecreasingProfile& f, double p,
                              double h, const QuadratureConfig& cfg = {});
/// ratio_limit defaults to the proven 1/2; larger values are experimental.
BoundReport check_entropy_upper(const profiles::DecreasingProfile& f, double h,
                                double ratio_limit = 0.5,
                                const QuadratureConfig& cfg = {});

}  // namespace logconc::bounds
