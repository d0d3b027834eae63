#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace weingarten {

/// Running trapezoid integral of y over x, starting from 0 at x[0].
[[nodiscard]] inline std::vector<double> cumulative_trapezoid(std::span<const double> x,
                                                              std::span<const double> y) {
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    }
    return out;
}

/// x_i = length * i / n for i = 0..n.
[[nodiscard]] inline std::vector<double> uniform_grid(double length, int n) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        out[static_cast<std::size_t>(i)] = length * static_cast<double>(i) / static_cast<double>(n);
    }
    return out;
}

} // namespace weingarten
