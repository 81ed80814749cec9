#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "padic/context.hpp"
#include "padic/number.hpp"

namespace padic {

/// An exact element c_0 + c_1 g + ... of Q(g) with rational coefficients,
/// used for user input and for rendering results that are recognisably
/// rational. Trailing zero coefficients are dropped.
class ExactElement {
public:
    ExactElement() = default;
    explicit ExactElement(std::vector<mpq_class> coeffs);
    static ExactElement rational(const mpq_class& q);
    static ExactElement integer(long a) { return rational(mpq_class(a)); }
    static ExactElement generator();

    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// No g-terms.
    bool is_rational() const noexcept { return coeffs_.size() <= 1; }
    mpq_class constant() const { return coeffs_.empty() ? mpq_class(0) : coeffs_[0]; }
    std::size_t degree_bound() const noexcept { return coeffs_.size(); }

    ExactElement operator+(const ExactElement& o) const;
    ExactElement operator-(const ExactElement& o) const;
    ExactElement operator-() const;
    ExactElement scaled(const mpq_class& c) const;

    /// Product reduced by the modulus of ctx.
    ExactElement times(const ExactElement& o, const PadicContext& ctx) const;

    /// Requires degree_bound() <= ctx->degree().
    PadicNumber to_padic(const Context& ctx) const;

    friend bool operator==(const ExactElement& a, const ExactElement& b) { return a.coeffs_ == b.coeffs_; }

    /// Highest power first: "g - 1/2", "2*g^2 + 3", "-7/3", "0".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Recovers a/b from each unit coefficient of x when both |a| and b are at
/// most sqrt(p^A / 2), A the relative precision (extended Euclid). Returns
/// nothing when some coefficient has no such representation; exact zeros
/// and zeros to a positive absolute precision give 0.
std::optional<ExactElement> reconstruct_rational(const PadicNumber& x);

}  // namespace padic
