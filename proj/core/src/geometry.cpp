#include "weingarten/geometry.hpp"

#include "weingarten/profile_io.hpp"
#include "weingarten/residual.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace weingarten {

std::vector<CurvatureSample> principal_curvatures(const RadialSolution& sol) {
    require(sol.size() >= 3, ErrorCode::TooFewNodes, "curvatures need at least 3 nodes");
    const auto ddu = second_derivative(sol);
    std::vector<CurvatureSample> out;
    out.reserve(sol.size());
    for (std::size_t i = 0; i < sol.size(); ++i) {
        const double r = sol.r[i];
        const double p = sol.du[i];
        const double q = ddu[i];
        if (std::isnan(q) || (r == 0.0 && p != 0.0)) {
            continue;
        }
        CurvatureSample s;
        s.node = i;
        s.r = r;
        const double w2 = 1.0 + p * p;
        const double w = std::sqrt(w2);
        s.kappa1 = q / (w2 * w);
        s.kappa2 = r == 0.0 ? q : p / (r * w);
        s.H = 0.5 * (s.kappa1 + s.kappa2);
        s.K = s.kappa1 * s.kappa2;
        s.nu = 1.0 / w;
        out.push_back(s);
    }
    return out;
}

std::vector<CurvatureSample> principal_curvatures(const ParametricProfile& profile) {
    const auto& pts = profile.points;
    require(pts.size() >= 3, ErrorCode::TooFewNodes, "curvatures need at least 3 points");
    std::vector<CurvatureSample> out;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const double h1 = std::hypot(pts[i][0] - pts[i - 1][0], pts[i][1] - pts[i - 1][1]);
        const double h2 = std::hypot(pts[i + 1][0] - pts[i][0], pts[i + 1][1] - pts[i][1]);
        if (h1 == 0.0 || h2 == 0.0 || pts[i][0] == 0.0) {
            continue;
        }
        // Three-point first and second derivatives on the non-uniform chord parameter.
        const double c0 = -h2 / (h1 * (h1 + h2));
        const double c1 = (h2 - h1) / (h1 * h2);
        const double c2 = h1 / (h2 * (h1 + h2));
        const double d0 = 2.0 / (h1 * (h1 + h2));
        const double d1 = -2.0 / (h1 * h2);
        const double d2 = 2.0 / (h2 * (h1 + h2));
        const double dr = c0 * pts[i - 1][0] + c1 * pts[i][0] + c2 * pts[i + 1][0];
        const double dz = c0 * pts[i - 1][1] + c1 * pts[i][1] + c2 * pts[i + 1][1];
        const double ddr = d0 * pts[i - 1][0] + d1 * pts[i][0] + d2 * pts[i + 1][0];
        const double ddz = d0 * pts[i - 1][1] + d1 * pts[i][1] + d2 * pts[i + 1][1];
        const double speed = std::hypot(dr, dz);
        CurvatureSample s;
        s.node = i;
        s.r = pts[i][0];
        s.kappa1 = (dr * ddz - dz * ddr) / (speed * speed * speed);
        s.kappa2 = dz / (s.r * speed);
        s.H = 0.5 * (s.kappa1 + s.kappa2);
        s.K = s.kappa1 * s.kappa2;
        s.nu = dr / speed;
        out.push_back(s);
    }
    return out;
}

ResidualReport weingarten_residual(const WeingartenParams& params, const Phi& phi, const RadialSolution& sol) {
    const auto samples = principal_curvatures(sol);
    std::vector<double> per_node(sol.size(), 0.0);
    std::vector<bool> seen(sol.size(), false);
    for (const auto& s : samples) {
        per_node[s.node] = std::abs(2.0 * params.a * s.H + params.b * s.K - phi.eval(s.nu));
        seen[s.node] = true;
    }
    std::vector<std::size_t> skipped;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            skipped.push_back(i);
        }
    }
    return summarize_residual(std::move(per_node), std::move(skipped));
}

RadialSolution flip(const RadialSolution& sol) {
    RadialSolution out = sol;
    for (double& v : out.u) {
        v = -v;
    }
    for (double& v : out.du) {
        v = -v;
    }
    for (double& v : out.ddu) {
        v = -v;
    }
    out.vertical_shift = -out.vertical_shift;
    return out;
}

Mesh revolve_to_mesh(const ParametricProfile& profile, int n_theta) {
    require(n_theta >= 8, ErrorCode::InvalidArgument, "n_theta must be at least 8");
    const auto& pts = profile.points;
    require(pts.size() >= 2, ErrorCode::DegenerateProfile, "a profile needs at least 2 points");

    const auto sectors = static_cast<std::size_t>(n_theta);
    Mesh mesh;
    // First vertex index of each profile point; apexes own a single vertex.
    std::vector<std::size_t> first(pts.size());
    std::vector<bool> apex(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        first[i] = mesh.vertices.size();
        apex[i] = pts[i][0] == 0.0;
        if (apex[i]) {
            mesh.vertices.push_back({0.0, 0.0, pts[i][1]});
            continue;
        }
        for (std::size_t j = 0; j < sectors; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(sectors);
            mesh.vertices.push_back({pts[i][0] * std::cos(theta), pts[i][0] * std::sin(theta), pts[i][1]});
        }
    }

    auto vertex = [&](std::size_t i, std::size_t j) { return apex[i] ? first[i] : first[i] + j % sectors; };
    auto join = [&](std::size_t i, std::size_t k) {
        if (apex[i] && apex[k]) {
            return;
        }
        for (std::size_t j = 0; j < sectors; ++j) {
            const auto a = vertex(i, j);
            const auto b = vertex(k, j);
            const auto c = vertex(k, j + 1);
            const auto d = vertex(i, j + 1);
            if (!apex[k]) {
                mesh.faces.push_back({a, b, c});
            }
            if (!apex[i]) {
                mesh.faces.push_back({a, c, d});
            }
        }
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        join(i, i + 1);
    }
    if (profile.closed && pts.size() > 2) {
        join(pts.size() - 1, 0);
    }
    return mesh;
}

Mesh revolve_to_mesh(const RadialSolution& sol, int n_theta) {
    ParametricProfile profile;
    profile.points.reserve(sol.size());
    for (std::size_t i = 0; i < sol.size(); ++i) {
        profile.points.push_back({sol.r[i], sol.u[i]});
    }
    return revolve_to_mesh(profile, n_theta);
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, int> edge_counts(const Mesh& mesh) {
    std::map<std::pair<std::size_t, std::size_t>, int> counts;
    for (const auto& f : mesh.faces) {
        for (int e = 0; e < 3; ++e) {
            auto u = f[static_cast<std::size_t>(e)];
            auto v = f[static_cast<std::size_t>((e + 1) % 3)];
            if (u > v) {
                std::swap(u, v);
            }
            ++counts[{u, v}];
        }
    }
    return counts;
}

} // namespace

long euler_characteristic(const Mesh& mesh) {
    const auto edges = static_cast<long>(edge_counts(mesh).size());
    return static_cast<long>(mesh.vertices.size()) - edges + static_cast<long>(mesh.faces.size());
}

bool is_closed_manifold(const Mesh& mesh) {
    for (const auto& [edge, count] : edge_counts(mesh)) {
        if (count != 2) {
            return false;
        }
    }
    return !mesh.faces.empty();
}

void write_obj(const Mesh& mesh, const std::filesystem::path& path) {
    std::string out;
    for (const auto& v : mesh.vertices) {
        out += "v " + format_double(v[0]) + ' ' + format_double(v[1]) + ' ' + format_double(v[2]) + '\n';
    }
    for (const auto& f : mesh.faces) {
        out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + '\n';
    }
    write_file_atomic(path, out);
}

} // namespace weingarten
