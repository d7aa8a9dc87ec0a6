#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace logconc {

/// Tolerances and work limits shared by every integral in the library.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2048;
    double tail_cutoff_epsilon = 1e-14;

    void validate() const;
};

/// Thrown when an adaptive integral exhausts its subdivision budget or the
/// integrand shows no decay on an unbounded interval.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;

    QuadratureResult& operator+=(const QuadratureResult& other) {
        value += other.value;
        error_estimate += other.error_estimate;
        evaluations += other.evaluations;
        return *this;
    }
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

/// Integral over [a, +inf). Panels of doubling width are accumulated until the
/// integrand has fallen below tail_cutoff_epsilon times its observed peak and
/// the remaining exponential tail estimate is negligible; the tail estimate is
/// added to the result. `decay_hint`, when positive, seeds the panel scale.
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureConfig& cfg = {},
                                       double decay_hint = 0.0);

}  // namespace logconc
