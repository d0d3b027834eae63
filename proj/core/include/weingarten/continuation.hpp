#pragma once

#include "weingarten/radial_solution.hpp"

#include <string_view>

namespace weingarten {

/// Default breakdown threshold on |a + b kappa_2|, scaled by |a|.
inline constexpr double kDegeneracyTolerance = 1e-10;

enum class ContinuationStop {
    Reached,             ///< got to r_max
    StoppedVertical,     ///< |u'| would exceed slope_cap; profile truncated before it
    DegenerateParabolic, ///< the u'' coefficient vanishes at stop_radius
};

[[nodiscard]] std::string_view to_string(ContinuationStop stop) noexcept;

struct ContinuationResult {
    RadialSolution solution;
    ContinuationStop stop = ContinuationStop::Reached;
    /// r_max when Reached, otherwise the last radius the integration could reach.
    double stop_radius = 0.0;
};

/// Extends a profile outward with classical RK4 on
///   u'' = [phi(nu) - a u'/(r W)] / [a/W^3 + b u'/(r W^4)],  nu = 1/W,
/// starting from its last node.
///
/// The u'' coefficient equals (a + b kappa_2) / W^3 with kappa_2 = u'/(r W);
/// breakdown is declared when a + b kappa_2 changes sign or drops below
/// kDegeneracyTolerance |a| (the W^3 factor only reflects steepness, which
/// slope_cap handles). A step that crosses either limit is halved until it is
/// shorter than 1e-12 max(1, r); the profile then stops at the last good node.
/// Appended nodes fall on r0 + k step, plus r_max itself.
[[nodiscard]] ContinuationResult continue_ode(const RadialSolution& sol, double r_max, double step,
                                              double slope_cap);

/// a + b u'/(r W) at a node with r > 0.
[[nodiscard]] double ellipticity_factor(const WeingartenParams& params, double r, double du) noexcept;

} // namespace weingarten
