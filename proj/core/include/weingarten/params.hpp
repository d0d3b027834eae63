#pragma once

#include "weingarten/error.hpp"

#include <cmath>

namespace weingarten {

/// Coefficients of the linear Weingarten relation 2aH + bK = phi(nu).
struct WeingartenParams {
    double a = 1.0;
    double b = 0.0;

    WeingartenParams() = default;
    WeingartenParams(double a_, double b_) : a(a_), b(b_) {
        require(std::isfinite(a) && std::isfinite(b), ErrorCode::InvalidArgument,
                "coefficients a and b must be finite");
        require(a != 0.0 || b != 0.0, ErrorCode::DegenerateParams, "a and b cannot both vanish");
    }

    friend bool operator==(const WeingartenParams&, const WeingartenParams&) = default;
};

} // namespace weingarten
