#pragma once

#include "weingarten/parabolic.hpp"
#include "weingarten/radial_solution.hpp"

#include <array>
#include <cstddef>
#include <filesystem>
#include <vector>

namespace weingarten {

/// Principal curvatures of the surface of revolution at one profile node.
struct CurvatureSample {
    double r = 0.0;
    double kappa1 = 0.0; ///< meridian: u'' / (1 + u'^2)^{3/2}
    double kappa2 = 0.0; ///< parallel: u' / (r sqrt(1 + u'^2))
    double H = 0.0;
    double K = 0.0;
    double nu = 1.0; ///< vertical component of the upward unit normal
    std::size_t node = 0;
};

/// One sample per node where u'' is available (see second_derivative); the
/// axis node uses kappa1 = kappa2 = u''(0). Throws TooFewNodes below 3 nodes.
[[nodiscard]] std::vector<CurvatureSample> principal_curvatures(const RadialSolution& sol);

/// Curvatures of a non-graph meridian (r(t), z(t)) at its interior points,
/// from centred differences in chord length. The normal is the profile
/// tangent turned counterclockwise, which is the upward normal for a graph.
[[nodiscard]] std::vector<CurvatureSample> principal_curvatures(const ParametricProfile& profile);

/// |2aH + bK - phi(nu)| per node; nodes without curvature data are skipped.
[[nodiscard]] ResidualReport weingarten_residual(const WeingartenParams& params, const Phi& phi,
                                                 const RadialSolution& sol);

/// Reflects the graph through z = 0: u, u' and u'' change sign.
[[nodiscard]] RadialSolution flip(const RadialSolution& sol);

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::size_t, 3>> faces;
};

/// Surface of revolution of a meridian curve around the z-axis.
///
/// Each off-axis point becomes a ring of n_theta vertices at angles
/// 2 pi j / n_theta; a point with r = 0 becomes a single apex vertex. Adjacent
/// rings are joined by two triangles per sector, rings and apexes by fans, and
/// a closed profile also joins its last point to its first. Faces are wound
/// counterclockwise around the normal obtained by turning the profile tangent
/// counterclockwise. Throws DegenerateProfile below 2 points and
/// InvalidArgument when n_theta < 8.
[[nodiscard]] Mesh revolve_to_mesh(const ParametricProfile& profile, int n_theta);
[[nodiscard]] Mesh revolve_to_mesh(const RadialSolution& sol, int n_theta);

/// V - E + F with E counted over distinct undirected edges.
[[nodiscard]] long euler_characteristic(const Mesh& mesh);

/// True when every undirected edge borders exactly two faces.
[[nodiscard]] bool is_closed_manifold(const Mesh& mesh);

/// `v x y z` lines, then 1-based `f i j k` lines; written atomically.
void write_obj(const Mesh& mesh, const std::filesystem::path& path);

} // namespace weingarten
