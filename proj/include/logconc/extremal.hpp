#pragma once

#include <functional>
#include <vector>

#include "logconc/measures.hpp"
#include "logconc/profiles.hpp"

namespace logconc::extremal {

/// Second moment of the plateau-exponential family member, in units of V h^2,
/// as a function of the plateau parameter x = d * rate and Delta = 1 - u/V.
double objective_upper_logconcave(double x, double delta);

/// Same for the plateau-power family; the inner Beta-type integral is expanded
/// into three monomial moments in closed form.
double objective_upper_sconcave(double x, double delta, double s);

/// The family member realizing x for given (Delta, h, V).
profiles::PlateauExponential family_member_upper_logconcave(double x, double delta,
                                                            double h, double V);
profiles::PlateauPower family_member_upper_sconcave(double x, double delta, double s,
                                                    double h, double V);

struct ReducedFamilyPoint {
    double x = 0.0;
    profiles::DecreasingProfile profile;
    double objective = 0.0;
};

/// One-parameter objective of the weighted lower-bound proof: the value of
/// int N f dmu over the truncated-exponential family member parametrized by x
/// in ((V/u) F_p(lambda h), Gamma(1-p)). Nondecreasing in x; its value at the
/// lower endpoint equals bounds::weighted_lower. x == 0 (admissible only for
/// lambda == 0) is evaluated by the analytic limit.
double weighted_objective(const profiles::ConvexWeight& N,
                          const measures::WeightedMeasure& mu, double u, double V,
                          double h, double x, const QuadratureConfig& cfg = {});

/// Admissible x-interval of weighted_objective.
std::pair<double, double> weighted_objective_domain(
    const measures::WeightedMeasure& mu, double u, double V, double h,
    const QuadratureConfig& cfg = {});

// The reduction lemmas as executable constructions. Each returns a family
// member with the same (u, V) as f against mu; the upper reductions never
// decrease and the lower reduction never increases int N f dmu for any
// increasing N.
profiles::PlateauExponential reduce_upper_logconcave(
    const profiles::DecreasingProfile& f, const measures::WeightedMeasure& mu,
    double h, const QuadratureConfig& cfg = {});

profiles::TruncatedExponential reduce_lower(const profiles::DecreasingProfile& f,
                                            const measures::WeightedMeasure& mu,
                                            double h,
                                            const QuadratureConfig& cfg = {});

profiles::PlateauPower reduce_upper_sconcave(const profiles::DecreasingProfile& f,
                                             const measures::WeightedMeasure& mu,
                                             double h, double s,
                                             const QuadratureConfig& cfg = {});

struct SweepRow {
    double x = 0.0;
    double value = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double argmax = 0.0, max_value = 0.0;
    double argmin = 0.0, min_value = 0.0;
    bool nonincreasing = true;
    bool nondecreasing = true;

    bool monotone() const { return nonincreasing || nondecreasing; }
};

/// Log-spaced grid on [max(x_min, span*1e-6), x_max]; x_min itself is kept as
/// the first point (x_min == 0 rides on the objective's analytic limit).
std::vector<double> make_sweep_grid(double x_min, double x_max, int steps);

SweepResult sweep(const std::function<double(double)>& objective,
                  const std::vector<double>& xs);

}  // namespace logconc::extremal
