#pragma once

#include <cstdint>

#include "logconc/bounds.hpp"
#include "logconc/profiles.hpp"

namespace logconc::geometry {

/// A symmetric convex body reduced to its cross-section function along one
/// direction: section(t) = |K intersect {<x,theta> = t}| on [0, inf).
struct BodyProfile {
    int n = 2;
    profiles::DecreasingProfile section;
    bool normalized = true;  ///< |K| = 2 int section = 1
};

enum class BodyKind { CubeAxis, Ball, L1BallAxis };

/// Volume-normalized builtin bodies (axis direction for cube and l1 ball).
BodyProfile builtin_body(BodyKind kind, int n);

/// Wraps a caller-supplied section; throws unless 2 int section = 1 (1e-8).
BodyProfile make_body(int n, profiles::DecreasingProfile section,
                      const QuadratureConfig& cfg = {});

/// delta_n = 1 - (n/(n+2))^n, the admissible slab fraction at dimension n.
double dimension_threshold(int n);

double slab_volume(const BodyProfile& body, double h,
                   const QuadratureConfig& cfg = {});

/// int_K <x,theta>^2 dx = 2 int t^2 section(t) dt.
double direction_second_moment(const BodyProfile& body,
                               const QuadratureConfig& cfg = {});

struct SlabSandwichReport {
    double h = 0.0, slab = 0.0, moment = 0.0;
    double lower = 0.0, upper = 0.0;
    bool applicable = false;
    bounds::BoundReport lower_report, upper_report;
};

SlabSandwichReport slab_sandwich_check(const BodyProfile& body, double h,
                                       const QuadratureConfig& cfg = {});

struct IsotropicReport {
    double L_lower = 0.0, L_upper = 0.0;
    double h = 0.0, slab = 0.0;
    int n = 2;
    bool applicable = false;
};

IsotropicReport isotropic_sandwich(int n, double h, double slab);

struct FloatingRadii {
    double r_inner = 0.0, r_outer = 0.0;
    double delta_min = 0.0, delta_max = 0.5;
    bool applicable = false;
};

/// Ball radii sandwiching the floating body K_delta of a symmetric isotropic
/// body with isotropic constant L; admissible delta in [(1-delta_n)/2, 1/2].
FloatingRadii floating_radius_bounds(double L, int n, double delta);

struct MonteCarloSection {
    double estimate = 0.0;
    double std_error = 0.0;
    long samples = 0;
};

/// Central section of the unit cube perpendicular to the main diagonal,
/// estimated by slab differencing over uniform samples (fixed seed).
MonteCarloSection mc_diagonal_section(int n, long samples, std::uint64_t seed,
                                      double half_width = 0.02);

}  // namespace logconc::geometry
