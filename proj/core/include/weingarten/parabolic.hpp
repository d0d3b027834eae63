#pragma once

#include "weingarten/radial_solution.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace weingarten {

/// Normalized parabolic relation 2aH - K = a^2 with a > 0.
struct ParabolicRelation {
    double a = 1.0;
    double b = -1.0;
    double c = 1.0;
};

/// Divides 2 a0 H + b0 K = c by -b0 and flips orientation if needed so a > 0.
/// Throws ZeroB when b0 = 0 and NotParabolic when |a0^2 + b0 c| exceeds the
/// default class tolerance.
[[nodiscard]] ParabolicRelation normalize_parabolic(double a0, double b0, double c);

/// One arc of the circle family u(r) = sign (1/a) sqrt(1 - (a r + k)^2) + m.
struct CircleSolution {
    double a = 1.0;
    double k = 0.0;
    double m = 0.0;
    Branch sign = Branch::Minus;

    CircleSolution() = default;
    CircleSolution(double a_, double k_, double m_, Branch sign_);

    [[nodiscard]] double radius() const noexcept { return 1.0 / a; }
    /// Circle centre (r, z) in the meridian half-plane.
    [[nodiscard]] std::array<double, 2> center() const noexcept { return {-k / a, m}; }
    /// Open r-interval {r > 0 : |a r + k| < 1}; lo >= hi when empty.
    [[nodiscard]] std::array<double, 2> domain() const noexcept;
};

enum class ArcClass { MinorArc, HalfCircle, MajorArc, TangentCircle, TorusCircle, CylinderLine, Empty };

[[nodiscard]] std::string_view to_string(ArcClass arc) noexcept;

/// Which member of the family the shift k selects. CylinderLine is never
/// returned here; it belongs to the vertical-line solution of cylinder_profile.
[[nodiscard]] ArcClass classify_arc(double a, double k);

/// Inset from an endpoint where the slope blows up, as a fraction of the domain length.
inline constexpr double kEdgeInset = 1e-6;
/// Inset from a cusp endpoint on the axis (0 < |k| < 1), as a fraction of the domain length.
/// The second principal curvature grows like k / r there and a residual in
/// double precision cannot resolve it much closer.
inline constexpr double kAxisCuspInset = 1e-3;

/// Samples n + 1 nodes of the arc with closed-form u, u' and u''.
///
/// The domain endpoints are inset by kEdgeInset (vertical tangent) or
/// kAxisCuspInset (cusp on the axis); for k = 0 the axis node r = 0 is kept
/// exactly, where the arc meets the axis orthogonally.
///
/// The result carries the parameters of the radial equation that its graph
/// satisfies with the upward normal: (a, -1, a^2) for the Minus sign and
/// (-a, -1, a^2) for Plus, whose graph solves the relation only after the
/// orientation is reversed. Throws EmptyDomain when k >= 1.
[[nodiscard]] RadialSolution circle_profile(const CircleSolution& csol, int n);

/// Height of the closed-form arc at an endpoint r of its domain closure.
[[nodiscard]] double circle_height(const CircleSolution& csol, double r);

/// A meridian curve that is not a graph over r, as (r, z) points.
struct ParametricProfile {
    std::vector<std::array<double, 2>> points;
    bool closed = false;
};

/// Vertical line r = 1/a of height `height`: the cylinder with H = a/2, K = 0.
struct CylinderProfile {
    ParametricProfile profile;
    double a = 1.0;
    double mean_curvature = 0.0;
    double gauss_curvature = 0.0;
    ArcClass variant = ArcClass::CylinderLine;

    /// 2a H - K, which equals a^2.
    [[nodiscard]] double relation_lhs() const noexcept { return 2.0 * a * mean_curvature - gauss_curvature; }
};

/// n points on z in [0, height]; a zero height yields the two-node degenerate line.
[[nodiscard]] CylinderProfile cylinder_profile(double a, double height, int n);

/// Joins the Minus and Plus arcs of (a, k, m) into one meridian curve, walking
/// the lower arc outward and the upper arc back. For k <= -1 the curve is
/// closed (a full circle); for k = 0 both ends sit on the axis.
[[nodiscard]] ParametricProfile stitch_circle(double a, double k, double m, int n);

} // namespace weingarten
