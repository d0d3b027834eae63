#include "weingarten/classify.hpp"

#include <algorithm>
#include <limits>

namespace weingarten {

std::string_view to_string(TypeKind kind) noexcept {
    switch (kind) {
    case TypeKind::Elliptic: return "elliptic";
    case TypeKind::Parabolic: return "parabolic";
    case TypeKind::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

std::string_view to_string(GlobalKind kind) noexcept {
    switch (kind) {
    case GlobalKind::Elliptic: return "elliptic";
    case GlobalKind::Parabolic: return "parabolic";
    case GlobalKind::Hyperbolic: return "hyperbolic";
    case GlobalKind::Mixed: return "mixed";
    }
    return "unknown";
}

double discriminant(const WeingartenParams& params, const Phi& phi, double nu) {
    return params.a * params.a + params.b * phi.eval(nu);
}

double default_class_tolerance(const WeingartenParams& params) noexcept {
    const double a2 = params.a * params.a;
    return a2 > 0.0 ? kClassTolerance * a2 : kClassTolerance;
}

Classification classify_at(const WeingartenParams& params, const Phi& phi, double nu, double tol_class) {
    require(tol_class > 0.0, ErrorCode::InvalidArgument, "tol_class must be positive");
    const double d = discriminant(params, phi, nu);
    if (std::abs(d) <= tol_class) {
        return {TypeKind::Parabolic, d};
    }
    return {d > 0.0 ? TypeKind::Elliptic : TypeKind::Hyperbolic, d};
}

Classification classify_at(const WeingartenParams& params, const Phi& phi, double nu) {
    return classify_at(params, phi, nu, default_class_tolerance(params));
}

GlobalClassification classify_global(const WeingartenParams& params, const Phi& phi, int n_samples,
                                     double tol_class) {
    require(n_samples >= 2, ErrorCode::InvalidArgument, "classify_global needs at least 2 samples");
    require(tol_class > 0.0, ErrorCode::InvalidArgument, "tol_class must be positive");

    GlobalClassification out;
    out.min_discriminant = std::numeric_limits<double>::infinity();
    out.max_discriminant = -std::numeric_limits<double>::infinity();
    int positive = 0;
    int negative = 0;
    int flat = 0;
    const int last = n_samples - 1;
    for (int i = 0; i < n_samples; ++i) {
        // (2i - last) / last keeps the endpoints at exactly -1 and 1.
        const double nu = static_cast<double>(2 * i - last) / static_cast<double>(last);
        const double d = discriminant(params, phi, nu);
        out.min_discriminant = std::min(out.min_discriminant, d);
        out.max_discriminant = std::max(out.max_discriminant, d);
        if (std::abs(d) <= tol_class) {
            ++flat;
        } else if (d > 0.0) {
            ++positive;
        } else {
            ++negative;
        }
    }
    if (flat == n_samples) {
        out.kind = GlobalKind::Parabolic;
    } else if (positive == n_samples) {
        out.kind = GlobalKind::Elliptic;
    } else if (negative == n_samples) {
        out.kind = GlobalKind::Hyperbolic;
    } else {
        out.kind = GlobalKind::Mixed;
    }
    return out;
}

GlobalClassification classify_global(const WeingartenParams& params, const Phi& phi, int n_samples) {
    return classify_global(params, phi, n_samples, default_class_tolerance(params));
}

} // namespace weingarten
