#include "weingarten/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace weingarten {

std::string_view to_string(ContinuationStop stop) noexcept {
    switch (stop) {
    case ContinuationStop::Reached: return "reached";
    case ContinuationStop::StoppedVertical: return "StoppedVertical";
    case ContinuationStop::DegenerateParabolic: return "DegenerateParabolic";
    }
    return "unknown";
}

double ellipticity_factor(const WeingartenParams& params, double r, double du) noexcept {
    return params.a + params.b * du / (r * std::sqrt(1.0 + du * du));
}

namespace {

enum class StepFailure { Vertical, Degenerate };

struct State {
    double u = 0.0;
    double p = 0.0;
};

class Integrator {
public:
    Integrator(const RadialSolution& sol, double slope_cap, double factor_sign)
        : params_(sol.params), phi_(sol.phi), slope_cap_(slope_cap), factor_sign_(factor_sign),
          tau_(kDegeneracyTolerance * std::abs(sol.params.a)) {}

    /// One RK4 step, or the reason it cannot be taken.
    [[nodiscard]] std::optional<State> step(double r, State y, double h, StepFailure& why) const {
        State k1{};
        State k2{};
        State k3{};
        State k4{};
        if (!rhs(r, y, k1, why) || !rhs(r + 0.5 * h, advance(y, k1, 0.5 * h), k2, why) ||
            !rhs(r + 0.5 * h, advance(y, k2, 0.5 * h), k3, why) || !rhs(r + h, advance(y, k3, h), k4, why)) {
            return std::nullopt;
        }
        State next{y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
                   y.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p)};
        if (!admissible(r + h, next.p, why)) {
            return std::nullopt;
        }
        return next;
    }

    [[nodiscard]] bool admissible(double r, double p, StepFailure& why) const {
        if (!std::isfinite(p) || std::abs(p) > slope_cap_) {
            why = StepFailure::Vertical;
            return false;
        }
        const double factor = ellipticity_factor(params_, r, p);
        if (!(factor * factor_sign_ >= tau_)) {
            why = StepFailure::Degenerate;
            return false;
        }
        return true;
    }

private:
    static State advance(State y, State k, double h) { return {y.u + h * k.u, y.p + h * k.p}; }

    bool rhs(double r, State y, State& out, StepFailure& why) const {
        if (!admissible(r, y.p, why)) {
            return false;
        }
        const double p = y.p;
        const double w2 = 1.0 + p * p;
        const double w = std::sqrt(w2);
        const double numer = phi_.eval(1.0 / w) - params_.a * p / (r * w);
        const double denom = params_.a / (w2 * w) + params_.b * p / (r * w2 * w2);
        out = {p, numer / denom};
        if (!std::isfinite(out.p)) {
            why = StepFailure::Vertical;
            return false;
        }
        return true;
    }

    const WeingartenParams& params_;
    const Phi& phi_;
    double slope_cap_;
    double factor_sign_;
    double tau_;
};

} // namespace

ContinuationResult continue_ode(const RadialSolution& sol, double r_max, double step, double slope_cap) {
    sol.validate();
    require(step > 0.0 && std::isfinite(step), ErrorCode::InvalidArgument, "step must be positive");
    require(slope_cap > 0.0, ErrorCode::InvalidArgument, "slope_cap must be positive");
    const double r0 = sol.r.back();
    require(r0 > 0.0, ErrorCode::InvalidArgument, "continuation starts from a node off the axis");
    require(r_max > r0, ErrorCode::InvalidArgument, "r_max must exceed the last radius of the profile");

    ContinuationResult result;
    result.solution = sol;
    result.solution.provenance = Provenance::Continued;
    result.solution.ddu.clear();
    auto& out = result.solution;

    const double factor0 = ellipticity_factor(sol.params, r0, sol.du.back());
    const double tau = kDegeneracyTolerance * std::abs(sol.params.a);
    if (std::abs(factor0) < tau) {
        result.stop = ContinuationStop::DegenerateParabolic;
        result.stop_radius = r0;
        return result;
    }
    const Integrator integrator(sol, slope_cap, factor0 > 0.0 ? 1.0 : -1.0);

    double r = r0;
    State y{sol.u.back(), sol.du.back()};
    double h = step;
    long steps_taken = 0;
    while (r < r_max) {
        // Nominal nodes stay on r0 + k step so repeated runs line up.
        const double nominal = r0 + static_cast<double>(steps_taken + 1) * step;
        const double target = std::min(h == step ? nominal : r + h, r_max);
        StepFailure why = StepFailure::Vertical;
        auto next = integrator.step(r, y, target - r, why);
        if (!next) {
            h = 0.5 * std::min(h, target - r);
            if (h < 1e-12 * std::max(1.0, r)) {
                result.stop = why == StepFailure::Vertical ? ContinuationStop::StoppedVertical
                                                           : ContinuationStop::DegenerateParabolic;
                result.stop_radius = r;
                return result;
            }
            continue;
        }
        r = target;
        y = *next;
        if (h == step) {
            ++steps_taken;
        }
        out.r.push_back(r);
        out.u.push_back(y.u);
        out.du.push_back(y.p);
    }
    result.stop = ContinuationStop::Reached;
    result.stop_radius = r_max;
    return result;
}

} // namespace weingarten
