#include "weingarten/residual.hpp"

#include <cmath>
#include <limits>

namespace weingarten {

std::vector<double> second_derivative(const RadialSolution& sol) {
    if (sol.has_exact_second_derivative()) {
        return sol.ddu;
    }
    const std::size_t n = sol.size();
    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    if (n < 2) {
        return out;
    }
    if (sol.r[0] == 0.0 && sol.du[0] == 0.0) {
        out[0] = sol.du[1] / sol.r[1];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = sol.r[i] - sol.r[i - 1];
        const double h2 = sol.r[i + 1] - sol.r[i];
        out[i] = (-h2 / (h1 * (h1 + h2))) * sol.du[i - 1] + ((h2 - h1) / (h1 * h2)) * sol.du[i] +
                 (h1 / (h2 * (h1 + h2))) * sol.du[i + 1];
    }
    return out;
}

ResidualReport ode_residual(const WeingartenParams& params, const Phi& phi, const RadialSolution& sol) {
    require(sol.size() >= 3, ErrorCode::TooFewNodes, "ode_residual needs at least 3 nodes");
    const double a = params.a;
    const double b = params.b;
    const auto ddu = second_derivative(sol);

    std::vector<double> per_node(sol.size(), 0.0);
    std::vector<std::size_t> skipped;
    for (std::size_t i = 0; i < sol.size(); ++i) {
        const double r = sol.r[i];
        const double p = sol.du[i];
        const double q = ddu[i];
        if (std::isnan(q)) {
            skipped.push_back(i);
            continue;
        }
        if (r == 0.0) {
            if (p != 0.0) {
                skipped.push_back(i);
                continue;
            }
            per_node[i] = 2.0 * a * q + b * q * q - phi.eval(1.0);
            continue;
        }
        const double w2 = 1.0 + p * p;
        const double w = std::sqrt(w2);
        const double lhs = a * (q / (w2 * w) + p / (r * w)) + b * q * p / (r * w2 * w2);
        per_node[i] = lhs - phi.eval(1.0 / w);
    }
    return summarize_residual(std::move(per_node), std::move(skipped));
}

} // namespace weingarten
