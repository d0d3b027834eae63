#pragma once

#include "weingarten/radial_solution.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace weingarten {

/// Radial solution of the zero-boundary problem on the disk of radius R.
///
/// Solves the initial-value problem by fixed-point iteration on
/// [0, min(R, config.R)], continues it with RK4 (step config.R / config.n)
/// when config.R < R, and then subtracts u(R). Only derivatives of u enter
/// the equation, so the shifted profile solves it as well, and u(R) = 0 exactly.
///
/// Errors: as fixed_point_solve, plus StoppedVertical / DegenerateParabolic
/// when the continuation cannot reach R.
[[nodiscard]] RadialSolution solve_dirichlet_disk(const WeingartenParams& params, const Phi& phi, Branch branch,
                                                  double R, const SolverConfig& config);

enum class SignVerdict { Negative, Positive, Zero, Mixed };

[[nodiscard]] std::string_view to_string(SignVerdict verdict) noexcept;

struct SignReport {
    SignVerdict verdict = SignVerdict::Zero;
    double min_u = 0.0;
    double max_u = 0.0;
    double tolerance = 0.0;
};

/// Sign of u over the interior nodes (every node but the boundary one).
///
/// With tau = 1e-9 max(1, ||u||_inf): Zero when ||u||_inf <= tau; Mixed when
/// values beyond tau of both signs occur, or when a |u| <= tau node sits
/// anywhere except in the run next to the boundary; otherwise Negative or
/// Positive. Throws NotDirichlet when |u(R)| > tau.
[[nodiscard]] SignReport sign_report(const RadialSolution& sol);

struct Residual2d {
    ResidualReport report;
    /// Cartesian evaluation point for each entry of report.per_node.
    std::vector<std::array<double, 2>> points;
};

/// Cartesian check of the full equation on U(x, y) = u(sqrt(x^2 + y^2)).
///
/// u is interpolated by a cubic spline through the profile mirrored to
/// [-R, R] (so the axis is an interior knot) with the stored slopes clamped at
/// both ends. At the grid_n x grid_n lattice points inside the disk of radius
/// R - 2h the functional
///   a [(1+p^2) s - 2pq t + (1+q^2) r] / W^3 + b (r s - t^2) / W^4 - phi(1/W)
/// is evaluated with p, q, r = U_xx, s = U_yy, t = U_xy from fourth-order
/// centred differences on the 5-point stencil of step h (t as the product of
/// the first-derivative rules in x and y). The spline should be finer than h:
/// with knots spaced about h apart its piecewise-cubic kinks dominate the
/// stencil error. Throws GridTooCoarse when h >= R / 8.
[[nodiscard]] Residual2d functional_residual_2d(const WeingartenParams& params, const Phi& phi,
                                                const RadialSolution& sol, int grid_n, double h);

} // namespace weingarten
