#include "doctest.h"

#include "oracles.hpp"
#include "test_util.hpp"

#include "weingarten/continuation.hpp"
#include "weingarten/radial_solver.hpp"
#include "weingarten/residual.hpp"

#include <cmath>

using namespace weingarten;
using testutil::code_of;

namespace {

RadialSolution solve(const WeingartenParams& params, const Phi& phi, double R, int n) {
    SolverConfig config;
    config.R = R;
    config.n = n;
    config.tol = 1e-12;
    return fixed_point_solve(params, phi, Branch::Plus, config);
}

} // namespace

TEST_CASE("continuation follows the sphere of radius 2") {
    const auto start = solve({1.0, 0.0}, Phi::constant(1.0), 0.5, 512);
    const auto result = continue_ode(start, 1.9, 1e-3, 1e3);
    CHECK(result.stop == ContinuationStop::Reached);
    CHECK(result.stop_radius == 1.9);
    const auto& sol = result.solution;
    CHECK(sol.provenance == Provenance::Continued);
    CHECK(sol.r.back() == 1.9);
    CHECK_NOTHROW(sol.validate());
    const oracle::SphereCap cap{2.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.size(); ++i) {
        worst = std::max(worst, std::abs(sol.u[i] - cap.u(sol.r[i])));
    }
    CAPTURE(worst);
    CHECK(worst <= 1e-5);
    // The original nodes are kept untouched.
    for (std::size_t i = 0; i < start.size(); ++i) {
        CHECK(sol.r[i] == start.r[i]);
        CHECK(sol.u[i] == start.u[i]);
    }
}

TEST_CASE("continuation stops before the equator") {
    const auto start = solve({1.0, 0.0}, Phi::constant(1.0), 0.5, 512);
    const auto result = continue_ode(start, 2.5, 1e-3, 1e3);
    CHECK(result.stop == ContinuationStop::StoppedVertical);
    CHECK(result.stop_radius == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(result.solution.r.back() == result.stop_radius);
    CHECK(std::abs(result.solution.du.back()) <= 1e3);
    CHECK_NOTHROW(result.solution.validate());
}

TEST_CASE("continuation locates the parabolic breakdown") {
    // phi(nu) = 3 - 2.7 nu: phi(1) = 0.3 as in the constant case, which itself
    // only produces spheres and never reaches a + b kappa_2 = 0.
    const WeingartenParams params(1.0, -2.0);
    const auto phi = Phi::polynomial({3.0, -2.7});
    const auto start = solve(params, phi, 0.2, 256);
    const auto result = continue_ode(start, 3.0, 1e-3, 1e3);
    REQUIRE(result.stop == ContinuationStop::DegenerateParabolic);
    const double expected = oracle::breakdown_radius(
        params.a, params.b, [](double nu) { return 3.0 - 2.7 * nu; }, start.r.back(), start.du.back());
    CAPTURE(result.stop_radius);
    CAPTURE(expected);
    CHECK(std::abs(result.stop_radius - expected) <= 1e-6);
    CHECK(ellipticity_factor(params, result.stop_radius, result.solution.du.back()) > 0.0);
}

TEST_CASE("constant phi with b < 0 stays elliptic up to the vertical point") {
    const WeingartenParams params(1.0, -2.0);
    const auto start = solve(params, Phi::constant(0.3), 0.5, 256);
    const auto result = continue_ode(start, 10.0, 1e-3, 1e3);
    CHECK(result.stop == ContinuationStop::StoppedVertical);
}

TEST_CASE("continued profiles keep a small residual") {
    const auto start = solve({1.0, 1.0}, Phi::identity(), 0.3, 256);
    const auto result = continue_ode(start, 0.6, 0.3 / 256.0, 1e3);
    REQUIRE(result.stop == ContinuationStop::Reached);
    CHECK(ode_residual(start.params, start.phi, result.solution).max_abs <= 1e-3);
}

TEST_CASE("continuation preconditions") {
    const auto start = solve({1.0, 0.0}, Phi::constant(1.0), 0.5, 64);
    CHECK(code_of([&] { (void)continue_ode(start, 0.4, 1e-3, 1e3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { (void)continue_ode(start, 1.0, 0.0, 1e3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { (void)continue_ode(RadialSolution{}, 1.0, 1e-3, 1e3); }) == ErrorCode::InvalidArgument);
}
