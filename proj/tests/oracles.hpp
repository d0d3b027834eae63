#pragma once

// Reference computations that the tests compare against. Nothing here calls
// into the solver paths it is used to check.

#include <cmath>
#include <functional>
#include <utility>

namespace oracle {

/// Lower cap of the sphere of radius rho touching the origin: rho - sqrt(rho^2 - r^2).
struct SphereCap {
    double rho = 1.0;
    double u(double r) const { return rho - std::sqrt(rho * rho - r * r); }
    double du(double r) const { return r / std::sqrt(rho * rho - r * r); }
    double ddu(double r) const {
        const double s = rho * rho - r * r;
        return rho * rho / (s * std::sqrt(s));
    }
};

/// Positive root of alpha X^2 + beta X + gamma = 0 by the textbook formula
/// (sign selects the root), used for the integrated identity.
inline double quadratic_root(double alpha, double beta, double gamma, double sign) {
    return (-beta + sign * std::sqrt(beta * beta - 4.0 * alpha * gamma)) / (2.0 * alpha);
}

/// Locates where the radial equation stops being solvable for u'' by following
/// the meridian in its tangent angle psi instead of in r:
///
///   dr/dpsi = cos(psi) (a + b k2) / (phi(cos psi) - a k2),   k2 = sin(psi) / r.
///
/// This parametrisation is regular where a + b k2 = 0 (dr/dpsi just vanishes),
/// so the breakdown radius is found by RK4 in psi followed by bisection on
/// the step length for the sign change of a + b k2.
inline double breakdown_radius(double a, double b, const std::function<double(double)>& phi, double r0,
                               double slope0, double dpsi = 1e-5) {
    auto factor = [&](double psi, double r) { return a + b * std::sin(psi) / r; };
    auto drdpsi = [&](double psi, double r) {
        const double k2 = std::sin(psi) / r;
        return std::cos(psi) * (a + b * k2) / (phi(std::cos(psi)) - a * k2);
    };
    auto rk4 = [&](double psi, double r, double h) {
        const double k1 = drdpsi(psi, r);
        const double k2 = drdpsi(psi + 0.5 * h, r + 0.5 * h * k1);
        const double k3 = drdpsi(psi + 0.5 * h, r + 0.5 * h * k2);
        const double k4 = drdpsi(psi + h, r + h * k3);
        return r + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };
    double psi = std::atan(slope0);
    double r = r0;
    const double sign0 = factor(psi, r) > 0.0 ? 1.0 : -1.0;
    while (psi < 1.5707963267948966) {
        const double r_next = rk4(psi, r, dpsi);
        if (factor(psi + dpsi, r_next) * sign0 <= 0.0) {
            double lo = 0.0;
            double hi = dpsi;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (factor(psi + mid, rk4(psi, r, mid)) * sign0 > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return rk4(psi, r, lo);
        }
        psi += dpsi;
        r = r_next;
    }
    return std::nan("");
}

} // namespace oracle
