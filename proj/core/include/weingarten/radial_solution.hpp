#pragma once

#include "weingarten/params.hpp"
#include "weingarten/phi.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace weingarten {

/// Root of 2a x + b x^2 = phi(1) taken for u''(0).
enum class Branch { Plus, Minus };
enum class Provenance { FixedPoint, Continued, ClosedForm };

[[nodiscard]] constexpr double branch_sign(Branch branch) noexcept {
    return branch == Branch::Plus ? 1.0 : -1.0;
}
[[nodiscard]] std::string_view to_string(Branch branch) noexcept;
[[nodiscard]] std::string_view to_string(Provenance provenance) noexcept;
/// Accepts "plus"/"minus"; throws ParseError otherwise.
[[nodiscard]] Branch parse_branch(std::string_view text);

/// Sampled radial profile u(r) with its first derivative.
///
/// Fixed-point and continued profiles start at the axis (r[0] = 0). Closed-form
/// parabolic arcs may live on an interval away from the axis and then also
/// carry the exact second derivative in `ddu`; everywhere else `ddu` is empty.
struct RadialSolution {
    std::vector<double> r;
    std::vector<double> u;
    std::vector<double> du;
    std::vector<double> ddu;
    WeingartenParams params;
    Phi phi = Phi::constant(0.0);
    Branch branch = Branch::Plus;
    Provenance provenance = Provenance::FixedPoint;
    int iterations = 0;
    /// Constant subtracted from the solved heights (Dirichlet shift), so the
    /// initial-value data read u[0] + vertical_shift = 0.
    double vertical_shift = 0.0;

    [[nodiscard]] std::size_t size() const noexcept { return r.size(); }
    [[nodiscard]] bool has_exact_second_derivative() const noexcept { return !ddu.empty(); }

    /// Throws InvalidArgument when the sequences disagree in length, r is not
    /// strictly increasing, a slope is not finite, or a fixed-point profile
    /// does not start from u'(0) = 0 and u(0) + vertical_shift = 0.
    void validate() const;
};

struct SolverConfig {
    double R = 0.5;
    int n = 512;
    double tol = 1e-10;
    int max_iter = 200;
    double slope_cap = 1e3;

    void validate() const;
};

struct ResidualReport {
    double max_abs = 0.0;
    double rms = 0.0;
    std::vector<double> per_node;
    std::vector<std::size_t> skipped_nodes;
};

/// Fills max_abs and rms from per_node, ignoring the skipped indices.
[[nodiscard]] ResidualReport summarize_residual(std::vector<double> per_node,
                                                std::vector<std::size_t> skipped_nodes);

} // namespace weingarten
