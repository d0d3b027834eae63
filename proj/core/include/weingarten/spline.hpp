#pragma once

#include <span>
#include <vector>

namespace weingarten {

/// C^2 cubic spline with prescribed end slopes (clamped ends).
class ClampedSpline {
public:
    ClampedSpline(std::vector<double> x, std::vector<double> y, double slope_lo, double slope_hi);

    /// Evaluates inside [x.front(), x.back()]; outside, the end cubic is extended.
    [[nodiscard]] double operator()(double x) const;

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_; // second derivatives at the knots
};

} // namespace weingarten
