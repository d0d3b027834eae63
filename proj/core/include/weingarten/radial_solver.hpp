#pragma once

#include "weingarten/radial_solution.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace weingarten {

/// u''(0) from the axis limit 2a x + b x^2 = phi(1).
///
/// For b != 0 this is (-a + s sqrt(a^2 + b phi(1))) / b with s = +1 for Plus
/// and -1 for Minus; for b = 0 both branches give phi(1) / (2a).
/// Throws NoSolution when a^2 + b phi(1) < 0 and DegenerateParams when a = b = 0.
[[nodiscard]] double initial_curvature(const WeingartenParams& params, const Phi& phi, Branch branch);

/// One application of the integrated fixed-point map to a slope grid.
///
/// With g(y) = phi(1 / sqrt(1 + y^2)) / a and I(r) = int_0^r t g(u'(t)) dt
/// (cumulative trapezoid), solves r X + (b / 2a) X^2 = I(r) for X = f(u'),
/// f(y) = y / sqrt(1 + y^2), and returns f^{-1}(X) at every node.
///
/// The quadratic root is picked so that X / r tends to initial_curvature(branch)
/// as r -> 0, which means the sign in front of the square root is the branch
/// sign times sign(a).
///
/// Throws RadicandNegative when r^2 + (2b/a) I(r) < 0 at a node and
/// SlopeBlowup when |X| >= 1 at a node.
[[nodiscard]] std::vector<double> apply_T(const WeingartenParams& params, const Phi& phi, Branch branch,
                                          std::span<const double> r_grid, std::span<const double> du_grid);

/// Picard iteration of apply_T from u' = 0 on a uniform grid of [0, config.R].
///
/// Stops once ||u_{k+1} - u_k||_inf + ||u'_{k+1} - u'_k||_inf <= config.tol;
/// u is recovered from u' by the trapezoid rule with u(0) = 0.
///
/// Errors: NoSolution (hyperbolic at the axis), DegenerateParabolic (parabolic
/// at the axis, see the parabolic module), DegenerateParams (a = 0),
/// NonConvergence, plus RadicandNegative / SlopeBlowup from apply_T. A slope
/// beyond config.slope_cap also raises SlopeBlowup.
[[nodiscard]] RadialSolution fixed_point_solve(const WeingartenParams& params, const Phi& phi, Branch branch,
                                               const SolverConfig& config);

/// Largest observed ||Tu - Tv|| / ||u - v|| over `trials` random pairs, in the
/// norm ||w||_inf + ||w'||_inf on a uniform grid of [0, R].
///
/// Each trial draws two slope grids as piecewise-linear interpolants of
/// kContractionKnots uniform knot values, each scaled so its norm is
/// kContractionRadius times a uniform factor in [0.5, 1). Randomness comes
/// from Lcg64(seed), drawn in a fixed order, so the estimate is reproducible.
[[nodiscard]] double estimate_contraction(const WeingartenParams& params, const Phi& phi, Branch branch,
                                          double R, int n, int trials, std::uint64_t seed);

inline constexpr int kContractionKnots = 9;
inline constexpr double kContractionRadius = 0.25;

/// Least-squares fit of u = c0 + c1 r + c2 r^2 on the first `nodes` nodes,
/// returned as the implied u''(0) = 2 c2.
[[nodiscard]] double fitted_axis_curvature(const RadialSolution& sol, int nodes = 5);

} // namespace weingarten
