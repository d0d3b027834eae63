#include "weingarten/radial_solution.hpp"

#include <cmath>
#include <string>

namespace weingarten {

std::string_view to_string(Branch branch) noexcept { return branch == Branch::Plus ? "plus" : "minus"; }

std::string_view to_string(Provenance provenance) noexcept {
    switch (provenance) {
    case Provenance::FixedPoint: return "fixed_point";
    case Provenance::Continued: return "continued";
    case Provenance::ClosedForm: return "closed_form";
    }
    return "unknown";
}

Branch parse_branch(std::string_view text) {
    if (text == "plus") {
        return Branch::Plus;
    }
    if (text == "minus") {
        return Branch::Minus;
    }
    fail(ErrorCode::ParseError, "branch must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

void RadialSolution::validate() const {
    require(!r.empty(), ErrorCode::InvalidArgument, "profile has no nodes");
    require(u.size() == r.size() && du.size() == r.size(), ErrorCode::InvalidArgument,
            "r, u and du must have equal length");
    require(ddu.empty() || ddu.size() == r.size(), ErrorCode::InvalidArgument,
            "ddu must be empty or match r in length");
    require(r.front() >= 0.0, ErrorCode::InvalidArgument, "radii must be non-negative");
    for (std::size_t i = 1; i < r.size(); ++i) {
        require(r[i] > r[i - 1], ErrorCode::InvalidArgument, "radii must be strictly increasing");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        require(std::isfinite(u[i]) && std::isfinite(du[i]), ErrorCode::InvalidArgument,
                "profile values must be finite (node " + std::to_string(i) + ")");
    }
    if (provenance != Provenance::ClosedForm) {
        require(r.front() == 0.0, ErrorCode::InvalidArgument, "numerical profiles start on the axis");
    }
    if (provenance == Provenance::FixedPoint) {
        require(u.front() + vertical_shift == 0.0 && du.front() == 0.0, ErrorCode::InvalidArgument,
                "fixed-point profiles satisfy u(0) = u'(0) = 0 up to the recorded shift");
    }
}

void SolverConfig::validate() const {
    require(std::isfinite(R) && R > 0.0, ErrorCode::InvalidArgument, "R must be positive");
    require(n >= 8, ErrorCode::InvalidArgument, "n must be at least 8");
    require(std::isfinite(tol) && tol > 0.0, ErrorCode::InvalidArgument, "tol must be positive");
    require(max_iter >= 1, ErrorCode::InvalidArgument, "max_iter must be at least 1");
    require(slope_cap > 0.0, ErrorCode::InvalidArgument, "slope_cap must be positive");
}

ResidualReport summarize_residual(std::vector<double> per_node, std::vector<std::size_t> skipped_nodes) {
    ResidualReport report;
    report.per_node = std::move(per_node);
    report.skipped_nodes = std::move(skipped_nodes);
    std::vector<bool> skip(report.per_node.size(), false);
    for (auto i : report.skipped_nodes) {
        if (i < skip.size()) {
            skip[i] = true;
        }
    }
    double sum_sq = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < report.per_node.size(); ++i) {
        if (skip[i]) {
            continue;
        }
        const double v = std::abs(report.per_node[i]);
        report.max_abs = std::max(report.max_abs, v);
        sum_sq += v * v;
        ++counted;
    }
    report.rms = counted > 0 ? std::sqrt(sum_sq / static_cast<double>(counted)) : 0.0;
    return report;
}

} // namespace weingarten
