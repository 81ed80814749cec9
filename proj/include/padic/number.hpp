#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "padic/context.hpp"

namespace padic {

/// Absolute precision reported for exact zeros.
inline constexpr long kExactPrecision = 1L << 40;

/// An element of Q_p or of an unramified extension, stored as p^v * u(g)
/// with u a unit known modulo p^prec (capped relative precision).
///
/// The absolute precision of a non-zero value is v + prec. A value that
/// cancelled below its precision is "zero to absolute precision A"; literal
/// zeros are exact. Arithmetic tracks precision:
///   * and / keep the smaller relative precision of the operands,
///   + and - keep the smaller absolute precision (cancellation raises v and
///   lowers the surviving relative digits).
class PadicNumber {
public:
    /// Exact zero.
    static PadicNumber zero(Context ctx);
    /// Zero known to absolute precision A.
    static PadicNumber zero_to(Context ctx, long absolute_precision);
    static PadicNumber one(Context ctx);

    static PadicNumber from_integer(Context ctx, const mpz_class& a);
    static PadicNumber from_integer(Context ctx, long a) { return from_integer(std::move(ctx), mpz_class(a)); }
    /// a / b; valuation is extracted before inverting the denominator.
    static PadicNumber from_rational(Context ctx, const mpz_class& a, const mpz_class& b);
    static PadicNumber from_rational(Context ctx, const mpq_class& q);
    /// sum c_i g^i for i < f.
    static PadicNumber from_poly(Context ctx, std::span<const mpq_class> coeffs);
    /// The generator g (requires f >= 2).
    static PadicNumber generator(Context ctx);

    /// p^v * sum coeffs_i g^i, coefficients known modulo p^digits; the
    /// valuation of the coefficient vector is extracted. Relative precision
    /// is capped at the context precision.
    static PadicNumber from_parts(Context ctx, long v, std::vector<mpz_class> coeffs, long digits);

    const Context& context() const noexcept { return ctx_; }
    long prime() const noexcept;

    bool is_zero() const noexcept { return prec_ == 0; }
    bool is_exact_zero() const noexcept { return exact_; }

    /// Valuation of a non-zero value; for zero, its absolute precision
    /// (a lower bound on the true valuation).
    long valuation() const noexcept { return val_; }
    long absolute_precision() const noexcept;
    long relative_precision() const noexcept { return prec_; }

    /// Unit part, f coefficients in [0, p^prec). Empty for zero.
    const std::vector<mpz_class>& unit() const noexcept { return unit_; }

    /// Unit coefficients are all zero in degree >= 1 (the value lies in Q_p
    /// as far as its representation shows).
    bool is_rational() const noexcept;

    /// Truncation to absolute precision a (never raises precision).
    PadicNumber with_absolute_precision(long a) const;

    /// Multiplication by p^k.
    PadicNumber shifted(long k) const;

    PadicNumber divided_by_integer(long k) const;
    PadicNumber times_integer(const mpz_class& k) const;

    /// Integer power; negative exponents need a non-zero value.
    PadicNumber pow(long e) const;

    PadicNumber operator-() const;
    PadicNumber& operator+=(const PadicNumber& o);
    PadicNumber& operator-=(const PadicNumber& o);
    PadicNumber& operator*=(const PadicNumber& o);
    PadicNumber& operator/=(const PadicNumber& o);

    /// Identical representation (valuation, precision, digits).
    friend bool operator==(const PadicNumber& a, const PadicNumber& b);

    /// Canonical text form: "p^v * (c0 + c1*g + ...)", "0" for an exact
    /// zero and "O(p^A)" for a zero to absolute precision A.
    std::string to_string() const;

    /// Canonical form followed by " + O(p^A)".
    std::string to_string_with_precision() const;

    /// Base-p digits of each unit coefficient, least significant first.
    std::vector<std::vector<long>> digits() const;

private:
    PadicNumber(Context ctx, long v, long prec, bool exact, std::vector<mpz_class> unit);

    Context ctx_;
    long val_ = 0;
    long prec_ = 0;
    bool exact_ = false;
    std::vector<mpz_class> unit_;
};

PadicNumber operator+(PadicNumber a, const PadicNumber& b);
PadicNumber operator-(PadicNumber a, const PadicNumber& b);
PadicNumber operator*(PadicNumber a, const PadicNumber& b);
PadicNumber operator/(PadicNumber a, const PadicNumber& b);

PadicNumber operator+(const PadicNumber& a, long b);
PadicNumber operator-(const PadicNumber& a, long b);
PadicNumber operator-(long a, const PadicNumber& b);
PadicNumber operator*(const PadicNumber& a, long b);

/// v(a - b), or the absolute precision of the difference when it vanishes
/// to that precision.
long residual_valuation(const PadicNumber& a, const PadicNumber& b);

/// a and b agree to the smaller of their absolute precisions.
bool agrees(const PadicNumber& a, const PadicNumber& b);

}  // namespace padic
