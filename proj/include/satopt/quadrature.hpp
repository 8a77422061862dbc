#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace satopt::quadrature {

inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kAbsFloor = 1e-30;

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive integration over [a, b]. Throws QuadratureError when the
/// estimated error exceeds the requested tolerance (with diagnostics).
template <typename F>
double integrate_finite(F&& f, double a, double b,
                        double rel_tol = kDefaultRelTol) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    const double result =
        integrator.integrate(std::forward<F>(f), a, b, rel_tol, &error, &l1);
    if (!std::isfinite(result)) {
        throw QuadratureError("finite-interval quadrature diverged on [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    if (error > 100.0 * rel_tol * std::abs(result) + kAbsFloor &&
        error > 100.0 * rel_tol * l1 + kAbsFloor) {
        throw QuadratureError(
            "finite-interval quadrature failed to converge: estimated error " +
            std::to_string(error) + " for result " + std::to_string(result));
    }
    return result;
}

/// Adaptive integration over [a, inf).
template <typename F>
double integrate_semi_infinite(F&& f, double a = 0.0,
                               double rel_tol = kDefaultRelTol) {
    boost::math::quadrature::exp_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    auto shifted = [&](double u) { return f(a + u); };
    const double result = integrator.integrate(shifted, rel_tol, &error, &l1);
    if (!std::isfinite(result)) {
        throw QuadratureError("semi-infinite quadrature diverged");
    }
    if (error > 100.0 * rel_tol * std::abs(result) + kAbsFloor &&
        error > 100.0 * rel_tol * l1 + kAbsFloor) {
        throw QuadratureError(
            "semi-infinite quadrature failed to converge: estimated error " +
            std::to_string(error) + " for result " + std::to_string(result));
    }
    return result;
}

} // namespace satopt::quadrature
