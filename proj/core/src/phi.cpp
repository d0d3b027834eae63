#include "weingarten/phi.hpp"

#include "weingarten/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace weingarten {

namespace {

void require_finite(double value, const char* what) {
    require(std::isfinite(value), ErrorCode::InvalidArgument, std::string(what) + " must be finite");
}

double parse_number(std::string_view text) {
    // from_chars rejects a leading '+', which people do type on command lines.
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty() || !std::isfinite(value)) {
        fail(ErrorCode::ParseError, "not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

Phi Phi::constant(double c, bool lipschitz_only) {
    require_finite(c, "constant phi");
    return Phi(Constant{c}, lipschitz_only);
}

Phi Phi::identity(bool lipschitz_only) { return Phi(Identity{}, lipschitz_only); }

Phi Phi::polynomial(std::vector<double> coefficients, bool lipschitz_only) {
    require(!coefficients.empty(), ErrorCode::InvalidArgument, "polynomial phi needs at least one coefficient");
    for (double c : coefficients) {
        require_finite(c, "polynomial coefficient");
    }
    return Phi(Polynomial{std::move(coefficients)}, lipschitz_only);
}

double Phi::eval(double nu) const {
    require(nu >= -1.0 && nu <= 1.0, ErrorCode::DomainError,
            "phi is defined on [-1, 1], got nu = " + format_double(nu));
    struct Visitor {
        double nu;
        double operator()(const Constant& c) const { return c.value; }
        double operator()(const Identity&) const { return nu; }
        double operator()(const Polynomial& p) const {
            double acc = 0.0;
            for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
                acc = acc * nu + *it;
            }
            return acc;
        }
    };
    return std::visit(Visitor{nu}, form_);
}

bool Phi::is_constant() const noexcept {
    if (std::holds_alternative<Constant>(form_)) {
        return true;
    }
    if (const auto* p = std::get_if<Polynomial>(&form_)) {
        for (std::size_t i = 1; i < p->coefficients.size(); ++i) {
            if (p->coefficients[i] != 0.0) {
                return false;
            }
        }
        return true;
    }
    return false;
}

std::string Phi::to_string() const {
    struct Visitor {
        std::string operator()(const Constant& c) const { return "const:" + format_double(c.value); }
        std::string operator()(const Identity&) const { return "identity"; }
        std::string operator()(const Polynomial& p) const {
            std::string out = "poly:";
            for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                out += format_double(p.coefficients[i]);
            }
            return out;
        }
    };
    return std::visit(Visitor{}, form_);
}

Phi parse_phi(std::string_view text) {
    if (text == "identity") {
        return Phi::identity();
    }
    constexpr std::string_view const_prefix = "const:";
    constexpr std::string_view poly_prefix = "poly:";
    if (text.starts_with(const_prefix)) {
        return Phi::constant(parse_number(text.substr(const_prefix.size())));
    }
    if (text.starts_with(poly_prefix)) {
        std::string_view rest = text.substr(poly_prefix.size());
        std::vector<double> coefficients;
        while (true) {
            auto comma = rest.find(',');
            coefficients.push_back(parse_number(rest.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        return Phi::polynomial(std::move(coefficients));
    }
    fail(ErrorCode::ParseError,
         "unrecognised phi '" + std::string(text) + "' (expected const:<c>, identity or poly:<c0>,<c1>,...)");
}

} // namespace weingarten
