#include "weingarten/spline.hpp"

#include "weingarten/error.hpp"

#include <algorithm>

namespace weingarten {

ClampedSpline::ClampedSpline(std::vector<double> x, std::vector<double> y, double slope_lo, double slope_hi)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    require(n >= 2 && y_.size() == n, ErrorCode::InvalidArgument, "spline needs matching knots and values");
    for (std::size_t i = 1; i < n; ++i) {
        require(x_[i] > x_[i - 1], ErrorCode::InvalidArgument, "spline knots must increase strictly");
    }

    // Tridiagonal system for the knot second derivatives, Thomas algorithm.
    std::vector<double> lower(n, 0.0);
    std::vector<double> diag(n, 0.0);
    std::vector<double> upper(n, 0.0);
    std::vector<double> rhs(n, 0.0);
    const double h0 = x_[1] - x_[0];
    diag[0] = 2.0 * h0;
    upper[0] = h0;
    rhs[0] = 6.0 * ((y_[1] - y_[0]) / h0 - slope_lo);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x_[i] - x_[i - 1];
        const double hr = x_[i + 1] - x_[i];
        lower[i] = hl;
        diag[i] = 2.0 * (hl + hr);
        upper[i] = hr;
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
    }
    const double hn = x_[n - 1] - x_[n - 2];
    lower[n - 1] = hn;
    diag[n - 1] = 2.0 * hn;
    rhs[n - 1] = 6.0 * (slope_hi - (y_[n - 1] - y_[n - 2]) / hn);

    for (std::size_t i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m_.assign(n, 0.0);
    m_[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
    }
}

double ClampedSpline::operator()(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double left = x_[i + 1] - x;
    const double right = x - x_[i];
    return m_[i] * left * left * left / (6.0 * h) + m_[i + 1] * right * right * right / (6.0 * h) +
           (y_[i] / h - m_[i] * h / 6.0) * left + (y_[i + 1] / h - m_[i + 1] * h / 6.0) * right;
}

} // namespace weingarten
