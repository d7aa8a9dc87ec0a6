#pragma once

#include <string>

#include "logconc/profiles.hpp"

namespace logconc::prob {

/// An even random variable stored by the half-line restriction of its density;
/// the density on R is half_density(|t|) and 2 int_0^inf half_density = 1.
struct EvenRandomVariable {
    profiles::DecreasingProfile half_density;
};

/// Normalizes the amplitude so 2 int half = 1; rejects invalid profiles.
EvenRandomVariable make_even_variable(profiles::DecreasingProfile half,
                                      const QuadratureConfig& cfg = {});

double l2_norm(const EvenRandomVariable& X, const QuadratureConfig& cfg = {});
double mean_abs(const EvenRandomVariable& X, const QuadratureConfig& cfg = {});
/// E N(X) for an even weight N.
double expectation(const EvenRandomVariable& X, const profiles::ConvexWeight& N,
                   const QuadratureConfig& cfg = {});
/// Laplace transform E e^{sX} = E cosh(sX), by quadrature.
double laplace_transform(const EvenRandomVariable& X, double s,
                         const QuadratureConfig& cfg = {});

/// The median of |X|, by bisection on the head mass.
double median_abs(const EvenRandomVariable& X, const QuadratureConfig& cfg = {});

struct MedianSandwich {
    double lower = 0.0;
    double median = 0.0;
    double upper = 0.0;
};

/// lower = (log2/sqrt(2)) ||X||_2 <= median(|X|) <= (1/2) Ntilde^{-1}(E N(X)),
/// with Ntilde(t) = (1/t) int_0^t N.
MedianSandwich median_sandwich(const EvenRandomVariable& X,
                               const profiles::ConvexWeight& N,
                               const QuadratureConfig& cfg = {});

/// Median lower bound for an even s-concave variable:
/// sqrt((2s+1)(3s+1)/2) (1 - 2^{-s/(s+1)})/s ||X||_2.
double sconcave_median_lower(const EvenRandomVariable& X, double s,
                             const QuadratureConfig& cfg = {});

/// Closed-form lower bound on the Laplace transform at s from the median m.
double laplace_lower(double m, double s);

/// A nonnegative random variable stored by its survival function
/// P(X >= t), normalized to survival(0) = 1 and log-concave.
struct TailVariable {
    profiles::DecreasingProfile survival;
};

TailVariable make_tail_variable(profiles::DecreasingProfile survival,
                                const QuadratureConfig& cfg = {});

struct JensenReport {
    double bound = 0.0;      ///< quantitative lower bound on E N(X)
    double oracle = 0.0;     ///< E N(X) = int N'(t) P(X >= t) dt
    double classical = 0.0;  ///< Jensen's N(E X)
    double mean = 0.0;       ///< E X
    double head = 0.0;       ///< int_0^h P(X >= t) dt
    bool applicable = false; ///< head <= (1/2) E X
};

/// Improved Jensen bound; N must vanish at 0 and have a convex increasing
/// derivative.
JensenReport jensen_improved(const TailVariable& X, const profiles::ConvexWeight& N,
                             double h, const QuadratureConfig& cfg = {});

struct AnticoncentrationReport {
    double h = 0.0;
    double prob = 0.0;                ///< P(X <= h)
    double l2norm = 0.0;
    double premise_threshold = 0.0;   ///< 1 - e^{-sqrt(3)}
    double bound = 0.0;               ///< 1 - e^{-sqrt(2) h / ||X||_2}
    bool applicable = false;
    bool satisfied = false;
    std::string note;
};

/// Treats 2 * half_density as the density of a nonnegative variable and
/// checks P(X <= h) <= 1 - e^{-sqrt(2) h / ||X||_2} under the premise
/// P(X <= h) <= 1 - e^{-sqrt(3)}.
AnticoncentrationReport anticoncentration(const EvenRandomVariable& X, double h,
                                          const QuadratureConfig& cfg = {});

}  // namespace logconc::prob
