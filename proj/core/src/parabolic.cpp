#include "weingarten/parabolic.hpp"

#include "weingarten/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weingarten {

ParabolicRelation normalize_parabolic(double a0, double b0, double c) {
    require(std::isfinite(a0) && std::isfinite(b0) && std::isfinite(c), ErrorCode::InvalidArgument,
            "parabolic coefficients must be finite");
    if (b0 == 0.0) {
        fail(ErrorCode::ZeroB, "a parabolic relation needs b != 0");
    }
    const double d = a0 * a0 + b0 * c;
    const double a2 = a0 * a0;
    const double tol = a2 > 0.0 ? kClassTolerance * a2 : kClassTolerance;
    if (std::abs(d) > tol) {
        fail(ErrorCode::NotParabolic, "a^2 + b c = " + format_double(d) + " is not zero");
    }
    ParabolicRelation out;
    out.a = std::abs(a0 / b0);
    out.b = -1.0;
    out.c = out.a * out.a;
    return out;
}

CircleSolution::CircleSolution(double a_, double k_, double m_, Branch sign_) : a(a_), k(k_), m(m_), sign(sign_) {
    require(std::isfinite(a) && a > 0.0, ErrorCode::InvalidArgument, "circle parameter a must be positive");
    require(std::isfinite(k) && std::isfinite(m), ErrorCode::InvalidArgument, "k and m must be finite");
}

std::array<double, 2> CircleSolution::domain() const noexcept {
    return {std::max(0.0, (-1.0 - k) / a), (1.0 - k) / a};
}

std::string_view to_string(ArcClass arc) noexcept {
    switch (arc) {
    case ArcClass::MinorArc: return "minor_arc";
    case ArcClass::HalfCircle: return "half_circle";
    case ArcClass::MajorArc: return "major_arc";
    case ArcClass::TangentCircle: return "tangent_circle";
    case ArcClass::TorusCircle: return "torus_circle";
    case ArcClass::CylinderLine: return "cylinder_line";
    case ArcClass::Empty: return "empty";
    }
    return "unknown";
}

ArcClass classify_arc(double a, double k) {
    require(std::isfinite(a) && a > 0.0, ErrorCode::InvalidArgument, "classify_arc needs a > 0");
    require(std::isfinite(k), ErrorCode::InvalidArgument, "k must be finite");
    // Within kClassTolerance of 1 the domain (1 - k)/a is far below any usable
    // inset, so the arc is treated as empty.
    if (k >= 1.0 - kClassTolerance) {
        return ArcClass::Empty;
    }
    if (std::abs(k) <= kClassTolerance) {
        return ArcClass::HalfCircle;
    }
    if (k > 0.0) {
        return ArcClass::MinorArc;
    }
    if (std::abs(k + 1.0) <= kClassTolerance) {
        return ArcClass::TangentCircle;
    }
    return k > -1.0 ? ArcClass::MajorArc : ArcClass::TorusCircle;
}

double circle_height(const CircleSolution& csol, double r) {
    const double x = csol.a * r + csol.k;
    const double s = std::max(0.0, (1.0 - x) * (1.0 + x));
    return branch_sign(csol.sign) * std::sqrt(s) / csol.a + csol.m;
}

RadialSolution circle_profile(const CircleSolution& csol, int n) {
    require(n >= 2, ErrorCode::InvalidArgument, "circle_profile needs n >= 2");
    if (classify_arc(csol.a, csol.k) == ArcClass::Empty) {
        fail(ErrorCode::EmptyDomain, "k = " + format_double(csol.k) + " leaves no r > 0 with |a r + k| < 1");
    }
    const double a = csol.a;
    const double k = csol.k;
    const auto [lo, hi] = csol.domain();
    const double length = hi - lo;

    double start = lo;
    if (k == 0.0) {
        start = 0.0;
    } else if (k > -1.0) {
        start = lo + kAxisCuspInset * length;
    } else {
        start = lo + kEdgeInset * length;
    }
    const double stop = hi - kEdgeInset * length;

    RadialSolution sol;
    sol.params = WeingartenParams(csol.sign == Branch::Minus ? a : -a, -1.0);
    sol.phi = Phi::constant(a * a);
    sol.branch = csol.sign;
    sol.provenance = Provenance::ClosedForm;
    const auto count = static_cast<std::size_t>(n) + 1;
    sol.r.resize(count);
    sol.u.resize(count);
    sol.du.resize(count);
    sol.ddu.resize(count);
    const double s = branch_sign(csol.sign);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        const double r = i + 1 == count ? stop : start + t * (stop - start);
        // 1 - x^2 as (1 - x)(1 + x) with 1 + x = a r + (1 + k) keeps accuracy near x = -1.
        const double x = a * r + k;
        const double one_minus = (1.0 - k) - a * r;
        const double one_plus = (1.0 + k) + a * r;
        const double q = one_minus * one_plus;
        const double root = std::sqrt(q);
        sol.r[i] = r;
        sol.u[i] = s * root / a + csol.m;
        sol.du[i] = -s * x / root;
        sol.ddu[i] = -s * a / (q * root);
    }
    return sol;
}

CylinderProfile cylinder_profile(double a, double height, int n) {
    require(std::isfinite(a) && a > 0.0, ErrorCode::InvalidArgument, "cylinder needs a > 0");
    require(std::isfinite(height) && height >= 0.0, ErrorCode::InvalidArgument, "height must be non-negative");
    require(n >= 2, ErrorCode::InvalidArgument, "cylinder_profile needs n >= 2");
    CylinderProfile out;
    out.a = a;
    const double r0 = 1.0 / a;
    const int count = height == 0.0 ? 2 : n;
    for (int i = 0; i < count; ++i) {
        const double z = height * static_cast<double>(i) / static_cast<double>(count - 1);
        out.profile.points.push_back({r0, z});
    }
    out.mean_curvature = 0.5 / r0;
    out.gauss_curvature = 0.0;
    return out;
}

ParametricProfile stitch_circle(double a, double k, double m, int n) {
    const auto lower = circle_profile(CircleSolution(a, k, m, Branch::Minus), n);
    const auto upper = circle_profile(CircleSolution(a, k, m, Branch::Plus), n);
    ParametricProfile out;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        out.points.push_back({lower.r[i], lower.u[i]});
    }
    for (std::size_t i = upper.size(); i-- > 0;) {
        out.points.push_back({upper.r[i], upper.u[i]});
    }
    out.closed = k <= -1.0;
    return out;
}

} // namespace weingarten
