#pragma once

#include "weingarten/params.hpp"
#include "weingarten/phi.hpp"

#include <string_view>

namespace weingarten {

/// Default half-width of the parabolic band, relative to a^2.
inline constexpr double kClassTolerance = 1e-12;

enum class TypeKind { Elliptic, Parabolic, Hyperbolic };
enum class GlobalKind { Elliptic, Parabolic, Hyperbolic, Mixed };

[[nodiscard]] std::string_view to_string(TypeKind kind) noexcept;
[[nodiscard]] std::string_view to_string(GlobalKind kind) noexcept;

struct Classification {
    TypeKind kind = TypeKind::Elliptic;
    double discriminant = 0.0;
};

struct GlobalClassification {
    GlobalKind kind = GlobalKind::Elliptic;
    double min_discriminant = 0.0;
    double max_discriminant = 0.0;
};

/// a^2 + b phi(nu).
[[nodiscard]] double discriminant(const WeingartenParams& params, const Phi& phi, double nu);

/// kClassTolerance scaled by a^2 (absolute kClassTolerance when a = 0).
[[nodiscard]] double default_class_tolerance(const WeingartenParams& params) noexcept;

/// |D| <= tol_class is reported as Parabolic.
[[nodiscard]] Classification classify_at(const WeingartenParams& params, const Phi& phi, double nu,
                                          double tol_class);
[[nodiscard]] Classification classify_at(const WeingartenParams& params, const Phi& phi, double nu);

/// Samples D at n_samples uniform points of [-1, 1], endpoints included.
[[nodiscard]] GlobalClassification classify_global(const WeingartenParams& params, const Phi& phi,
                                                   int n_samples, double tol_class);
[[nodiscard]] GlobalClassification classify_global(const WeingartenParams& params, const Phi& phi,
                                                   int n_samples);

} // namespace weingarten
