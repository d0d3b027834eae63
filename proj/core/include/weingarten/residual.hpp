#pragma once

#include "weingarten/radial_solution.hpp"

#include <vector>

namespace weingarten {

/// u'' at every node, NaN where it cannot be formed.
///
/// Uses the stored closed form when the profile carries one. Otherwise takes
/// the three-point (non-uniform) centred derivative of u'. The axis node gets
/// u'_1 / r_1, the centred difference under the odd extension u'(-r) = -u'(r)
/// that holds when u'(0) = 0. The last node has no right neighbour and stays NaN.
///
/// Working from u' rather than u means the estimate ignores u entirely, so a
/// vertical shift of the profile leaves every derived quantity bit-identical.
[[nodiscard]] std::vector<double> second_derivative(const RadialSolution& sol);

/// Pointwise LHS - RHS of the radial equation
///   a (u''/W^3 + u'/(r W)) + b u'' u' / (r W^4) - phi(1/W),  W = sqrt(1 + u'^2),
/// with the axis node replaced by 2a u''(0) + b u''(0)^2 - phi(1).
/// Nodes without a usable u'' are listed in skipped_nodes and hold 0.
/// Throws TooFewNodes below three nodes.
[[nodiscard]] ResidualReport ode_residual(const WeingartenParams& params, const Phi& phi,
                                          const RadialSolution& sol);

} // namespace weingarten
