#include "weingarten/radial_solver.hpp"

#include "weingarten/classify.hpp"
#include "weingarten/lcg.hpp"
#include "weingarten/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace weingarten {

namespace {

double sup_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double sup_distance(std::span<const double> x, std::span<const double> y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        m = std::max(m, std::abs(x[i] - y[i]));
    }
    return m;
}

/// Common gate for everything that starts a solution on the axis.
void require_elliptic_at_axis(const WeingartenParams& params, const Phi& phi) {
    const auto cls = classify_at(params, phi, 1.0);
    if (cls.kind == TypeKind::Hyperbolic) {
        fail(ErrorCode::NoSolution, "hyperbolic at r = 0: a^2 + b phi(1) = " + format_double(cls.discriminant));
    }
    if (cls.kind == TypeKind::Parabolic) {
        fail(ErrorCode::DegenerateParabolic,
             "parabolic at r = 0; the solutions are the closed-form circles of the parabolic module");
    }
    require(params.a != 0.0, ErrorCode::DegenerateParams, "the fixed-point operator divides by a");
}

} // namespace

double initial_curvature(const WeingartenParams& params, const Phi& phi, Branch branch) {
    const double a = params.a;
    const double b = params.b;
    require(a != 0.0 || b != 0.0, ErrorCode::DegenerateParams, "a and b cannot both vanish");
    const double phi1 = phi.eval(1.0);
    if (b == 0.0) {
        return phi1 / (2.0 * a);
    }
    const double d = a * a + b * phi1;
    if (d < 0.0) {
        fail(ErrorCode::NoSolution, "a^2 + b phi(1) = " + format_double(d) + " < 0");
    }
    const double root = std::sqrt(d);
    // Same root written without cancellation when a and the chosen sqrt share a sign.
    const double s = branch_sign(branch);
    if (s * a > 0.0) {
        return phi1 / (a + s * root);
    }
    return (-a + s * root) / b;
}

std::vector<double> apply_T(const WeingartenParams& params, const Phi& phi, Branch branch,
                            std::span<const double> r_grid, std::span<const double> du_grid) {
    const double a = params.a;
    const double b = params.b;
    require(a != 0.0, ErrorCode::DegenerateParams, "the fixed-point operator divides by a");
    require(r_grid.size() == du_grid.size() && r_grid.size() >= 2, ErrorCode::InvalidArgument,
            "r and du grids must match and hold at least two nodes");
    require(r_grid.front() == 0.0, ErrorCode::InvalidArgument, "the grid must start on the axis");

    const std::size_t n = r_grid.size();
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = du_grid[i];
        const double nu = 1.0 / std::sqrt(1.0 + y * y);
        integrand[i] = r_grid[i] * phi.eval(nu) / a;
    }
    const auto I = cumulative_trapezoid(r_grid, integrand);

    const double s = branch_sign(branch) * (a > 0.0 ? 1.0 : -1.0);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double r = r_grid[i];
        double X = 0.0;
        if (b == 0.0) {
            X = I[i] / r;
        } else {
            const double radicand = r * r + (2.0 * b / a) * I[i];
            if (radicand < 0.0) {
                fail(ErrorCode::RadicandNegative,
                     "r^2 + (2b/a) I(r) = " + format_double(radicand) + " at r = " + format_double(r));
            }
            const double root = std::sqrt(radicand);
            // (a/b)(-r + root) rewritten as 2I / (r + root) to avoid cancellation.
            X = s > 0.0 ? 2.0 * I[i] / (r + root) : -(a / b) * (r + root);
        }
        if (!(std::abs(X) < 1.0)) {
            fail(ErrorCode::SlopeBlowup, "|f(u')| = " + format_double(std::abs(X)) + " >= 1 at r = " + format_double(r));
        }
        out[i] = X / std::sqrt((1.0 - X) * (1.0 + X));
    }
    return out;
}

RadialSolution fixed_point_solve(const WeingartenParams& params, const Phi& phi, Branch branch,
                                 const SolverConfig& config) {
    config.validate();
    require_elliptic_at_axis(params, phi);

    RadialSolution sol;
    sol.params = params;
    sol.phi = phi;
    sol.branch = branch;
    sol.provenance = Provenance::FixedPoint;
    sol.r = uniform_grid(config.R, config.n);
    sol.du.assign(sol.r.size(), 0.0);
    sol.u.assign(sol.r.size(), 0.0);

    for (int k = 1; k <= config.max_iter; ++k) {
        auto du_next = apply_T(params, phi, branch, sol.r, sol.du);
        auto u_next = cumulative_trapezoid(sol.r, du_next);
        const double slope = sup_norm(du_next);
        if (slope > config.slope_cap) {
            fail(ErrorCode::SlopeBlowup, "|u'| reached " + format_double(slope) + " beyond slope_cap");
        }
        const double change = sup_distance(u_next, sol.u) + sup_distance(du_next, sol.du);
        sol.du = std::move(du_next);
        sol.u = std::move(u_next);
        sol.iterations = k;
        if (change <= config.tol) {
            return sol;
        }
    }
    fail(ErrorCode::NonConvergence, "no convergence after " + std::to_string(config.max_iter) +
                                        " iterations on R = " + format_double(config.R) + "; try a smaller R");
}

double estimate_contraction(const WeingartenParams& params, const Phi& phi, Branch branch, double R, int n,
                            int trials, std::uint64_t seed) {
    require(trials >= 2, ErrorCode::InvalidArgument, "estimate_contraction needs at least 2 trials");
    require(R > 0.0 && n >= 8, ErrorCode::InvalidArgument, "need R > 0 and n >= 8");
    require_elliptic_at_axis(params, phi);

    const auto r = uniform_grid(R, n);
    Lcg64 rng(seed);

    auto draw = [&]() {
        std::array<double, kContractionKnots> knots{};
        for (double& k : knots) {
            k = rng.uniform(-1.0, 1.0);
        }
        const double spacing = R / static_cast<double>(kContractionKnots - 1);
        std::vector<double> du(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto cell = std::min(static_cast<std::size_t>(r[i] / spacing),
                                       static_cast<std::size_t>(kContractionKnots - 2));
            const double t = r[i] / spacing - static_cast<double>(cell);
            du[i] = (1.0 - t) * knots[cell] + t * knots[cell + 1];
        }
        const auto u = cumulative_trapezoid(r, du);
        const double norm = sup_norm(u) + sup_norm(du);
        const double scale = kContractionRadius * rng.uniform(0.5, 1.0) / norm;
        for (double& v : du) {
            v *= scale;
        }
        return du;
    };

    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto du_u = draw();
        const auto du_v = draw();
        const auto u = cumulative_trapezoid(r, du_u);
        const auto v = cumulative_trapezoid(r, du_v);
        const double denom = sup_distance(u, v) + sup_distance(du_u, du_v);
        if (denom == 0.0) {
            continue;
        }
        const auto tdu_u = apply_T(params, phi, branch, r, du_u);
        const auto tdu_v = apply_T(params, phi, branch, r, du_v);
        const auto tu = cumulative_trapezoid(r, tdu_u);
        const auto tv = cumulative_trapezoid(r, tdu_v);
        const double numer = sup_distance(tu, tv) + sup_distance(tdu_u, tdu_v);
        worst = std::max(worst, numer / denom);
    }
    return worst;
}

double fitted_axis_curvature(const RadialSolution& sol, int nodes) {
    require(nodes >= 3 && static_cast<std::size_t>(nodes) <= sol.size(), ErrorCode::TooFewNodes,
            "quadratic fit needs at least 3 nodes");
    // Normal equations in the scaled variable x = r / r_last for conditioning.
    const double scale = sol.r[static_cast<std::size_t>(nodes - 1)];
    std::array<std::array<double, 4>, 3> m{};
    for (int i = 0; i < nodes; ++i) {
        const double x = sol.r[static_cast<std::size_t>(i)] / scale;
        const std::array<double, 3> basis{1.0, x, x * x};
        for (int row = 0; row < 3; ++row) {
            for (int col = 0; col < 3; ++col) {
                m[row][col] += basis[row] * basis[col];
            }
            m[row][3] += basis[row] * sol.u[static_cast<std::size_t>(i)];
        }
    }
    for (int p = 0; p < 3; ++p) {
        int pivot = p;
        for (int row = p + 1; row < 3; ++row) {
            if (std::abs(m[row][p]) > std::abs(m[pivot][p])) {
                pivot = row;
            }
        }
        std::swap(m[p], m[pivot]);
        for (int row = p + 1; row < 3; ++row) {
            const double factor = m[row][p] / m[p][p];
            for (int col = p; col < 4; ++col) {
                m[row][col] -= factor * m[p][col];
            }
        }
    }
    std::array<double, 3> c{};
    for (int row = 2; row >= 0; --row) {
        double acc = m[row][3];
        for (int col = row + 1; col < 3; ++col) {
            acc -= m[row][col] * c[col];
        }
        c[row] = acc / m[row][row];
    }
    return 2.0 * c[2] / (scale * scale);
}

} // namespace weingarten
