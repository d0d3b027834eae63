#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weingarten {

/// Prescribed right-hand side phi on [-1, 1].
///
/// Only closed forms are representable so that every instance can be written
/// back out in the CLI grammar (`const:<c>`, `identity`, `poly:<c0>,<c1>,...`).
/// A new form needs a variant alternative here plus a branch in `eval`,
/// `to_string` and `parse_phi`.
class Phi {
public:
    struct Constant {
        double value = 0.0;
        friend bool operator==(const Constant&, const Constant&) = default;
    };
    struct Identity {
        friend bool operator==(const Identity&, const Identity&) = default;
    };
    /// Coefficients of ascending powers of nu.
    struct Polynomial {
        std::vector<double> coefficients;
        friend bool operator==(const Polynomial&, const Polynomial&) = default;
    };
    using Form = std::variant<Constant, Identity, Polynomial>;

    static Phi constant(double c, bool lipschitz_only = false);
    static Phi identity(bool lipschitz_only = false);
    static Phi polynomial(std::vector<double> coefficients, bool lipschitz_only = false);

    /// Throws DomainError outside [-1, 1].
    [[nodiscard]] double eval(double nu) const;

    [[nodiscard]] const Form& form() const noexcept { return form_; }
    [[nodiscard]] bool is_constant() const noexcept;

    /// The caller asserts only Lipschitz regularity near nu = 1, not C^1.
    /// Nothing in the solvers needs more than that, so the flag is informational.
    [[nodiscard]] bool lipschitz_only() const noexcept { return lipschitz_only_; }

    /// Round-trips through parse_phi with full double precision.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Phi&, const Phi&) = default;

private:
    Phi(Form form, bool lipschitz_only) : form_(std::move(form)), lipschitz_only_(lipschitz_only) {}

    Form form_;
    bool lipschitz_only_ = false;
};

[[nodiscard]] inline double eval_phi(const Phi& phi, double nu) { return phi.eval(nu); }

/// Parses the CLI grammar; throws ParseError on malformed input.
[[nodiscard]] Phi parse_phi(std::string_view text);

/// Shortest decimal form that reads back to the same double.
[[nodiscard]] std::string format_double(double value);

} // namespace weingarten
