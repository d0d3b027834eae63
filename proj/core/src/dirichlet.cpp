#include "weingarten/dirichlet.hpp"

#include "weingarten/continuation.hpp"
#include "weingarten/radial_solver.hpp"
#include "weingarten/spline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weingarten {

RadialSolution solve_dirichlet_disk(const WeingartenParams& params, const Phi& phi, Branch branch, double R,
                                    const SolverConfig& config) {
    require(std::isfinite(R) && R > 0.0, ErrorCode::InvalidArgument, "disk radius must be positive");
    SolverConfig local = config;
    local.R = std::min(R, config.R);
    auto sol = fixed_point_solve(params, phi, branch, local);

    if (local.R < R) {
        const double step = config.R / static_cast<double>(config.n);
        auto cont = continue_ode(sol, R, step, config.slope_cap);
        if (cont.stop == ContinuationStop::StoppedVertical) {
            fail(ErrorCode::StoppedVertical,
                 "the profile turns vertical at r = " + format_double(cont.stop_radius) + " before R");
        }
        if (cont.stop == ContinuationStop::DegenerateParabolic) {
            fail(ErrorCode::DegenerateParabolic,
                 "the equation degenerates at r = " + format_double(cont.stop_radius) + " before R");
        }
        sol = std::move(cont.solution);
    }

    const double shift = sol.u.back();
    for (double& v : sol.u) {
        v -= shift;
    }
    sol.vertical_shift = shift;
    return sol;
}

std::string_view to_string(SignVerdict verdict) noexcept {
    switch (verdict) {
    case SignVerdict::Negative: return "negative";
    case SignVerdict::Positive: return "positive";
    case SignVerdict::Zero: return "zero";
    case SignVerdict::Mixed: return "mixed";
    }
    return "unknown";
}

SignReport sign_report(const RadialSolution& sol) {
    require(sol.size() >= 2, ErrorCode::TooFewNodes, "sign_report needs a boundary node and an interior node");
    double sup = 0.0;
    for (double v : sol.u) {
        sup = std::max(sup, std::abs(v));
    }
    SignReport report;
    report.tolerance = 1e-9 * std::max(1.0, sup);
    const double tau = report.tolerance;
    if (std::abs(sol.u.back()) > tau) {
        fail(ErrorCode::NotDirichlet, "boundary value " + format_double(sol.u.back()) + " is not zero");
    }

    const std::size_t interior = sol.size() - 1;
    report.min_u = std::numeric_limits<double>::infinity();
    report.max_u = -std::numeric_limits<double>::infinity();
    bool positive = false;
    bool negative = false;
    bool stray_zero = false;
    // Near-zero nodes are tolerated only in the run that touches the boundary.
    bool in_boundary_run = true;
    for (std::size_t i = interior; i-- > 0;) {
        const double v = sol.u[i];
        report.min_u = std::min(report.min_u, v);
        report.max_u = std::max(report.max_u, v);
        if (v > tau) {
            positive = true;
            in_boundary_run = false;
        } else if (v < -tau) {
            negative = true;
            in_boundary_run = false;
        } else if (!in_boundary_run) {
            stray_zero = true;
        }
    }
    if (sup <= tau) {
        report.verdict = SignVerdict::Zero;
    } else if ((positive && negative) || stray_zero) {
        report.verdict = SignVerdict::Mixed;
    } else {
        report.verdict = negative ? SignVerdict::Negative : SignVerdict::Positive;
    }
    return report;
}

namespace {

// Fourth-order centred weights on x - 2h .. x + 2h; the mixed derivative is
// the tensor product of the first-derivative rule.
constexpr double kFirst[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
constexpr double kSecond[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};

} // namespace

Residual2d functional_residual_2d(const WeingartenParams& params, const Phi& phi, const RadialSolution& sol,
                                  int grid_n, double h) {
    sol.validate();
    require(sol.size() >= 3, ErrorCode::TooFewNodes, "2D residual needs at least 3 profile nodes");
    require(sol.r.front() == 0.0, ErrorCode::InvalidArgument, "2D residual needs a profile that starts on the axis");
    require(grid_n >= 2, ErrorCode::InvalidArgument, "grid_n must be at least 2");
    const double R = sol.r.back();
    require(h > 0.0, ErrorCode::InvalidArgument, "stencil step must be positive");
    if (h >= R / 8.0) {
        fail(ErrorCode::GridTooCoarse, "stencil step " + format_double(h) + " is not below R/8");
    }

    const std::size_t n = sol.size();
    std::vector<double> knots;
    std::vector<double> values;
    knots.reserve(2 * n - 1);
    values.reserve(2 * n - 1);
    for (std::size_t i = n; i-- > 1;) {
        knots.push_back(-sol.r[i]);
        values.push_back(sol.u[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        knots.push_back(sol.r[i]);
        values.push_back(sol.u[i]);
    }
    const ClampedSpline profile(std::move(knots), std::move(values), -sol.du.back(), sol.du.back());
    auto U = [&](double x, double y) { return profile(std::sqrt(x * x + y * y)); };

    const double a = params.a;
    const double b = params.b;
    // Axis-aligned stencil points stay inside the disk; the corners of the mixed
    // stencil can reach 0.83h past R, where the spline's end cubic is continued.
    const double rho = R - 2.0 * h;
    const int last = grid_n - 1;
    Residual2d out;
    std::vector<double> values_2d;
    for (int i = 0; i < grid_n; ++i) {
        // (2i - last) rho / last is exactly antisymmetric in i, so mirrored points match bitwise.
        const double x = rho * static_cast<double>(2 * i - last) / static_cast<double>(last);
        for (int j = 0; j < grid_n; ++j) {
            const double y = rho * static_cast<double>(2 * j - last) / static_cast<double>(last);
            if (x * x + y * y > rho * rho) {
                continue;
            }
            double p = 0.0;
            double q = 0.0;
            double uxx = 0.0;
            double uyy = 0.0;
            double uxy = 0.0;
            for (int s = 0; s < 5; ++s) {
                const double ds = static_cast<double>(s - 2) * h;
                const double along_x = U(x + ds, y);
                const double along_y = U(x, y + ds);
                p += kFirst[s] * along_x;
                q += kFirst[s] * along_y;
                uxx += kSecond[s] * along_x;
                uyy += kSecond[s] * along_y;
                if (kFirst[s] == 0.0) {
                    continue;
                }
                for (int t = 0; t < 5; ++t) {
                    if (kFirst[t] != 0.0) {
                        uxy += kFirst[s] * kFirst[t] * U(x + ds, y + static_cast<double>(t - 2) * h);
                    }
                }
            }
            p /= 12.0 * h;
            q /= 12.0 * h;
            uxx /= 12.0 * h * h;
            uyy /= 12.0 * h * h;
            uxy /= 144.0 * h * h;
            const double w2 = 1.0 + p * p + q * q;
            const double W = std::sqrt(w2);
            const double F = a * ((1.0 + p * p) * uyy - 2.0 * p * q * uxy + (1.0 + q * q) * uxx) / (w2 * W) +
                             b * (uxx * uyy - uxy * uxy) / (w2 * w2) - phi.eval(1.0 / W);
            values_2d.push_back(F);
            out.points.push_back({x, y});
        }
    }
    out.report = summarize_residual(std::move(values_2d), {});
    return out;
}

} // namespace weingarten
