#pragma once

#include <string>
#include <vector>

#include "padic/context.hpp"
#include "padic/number.hpp"

namespace padic {

/// Element of the residue field F_{p^f} = F_p[g] / (modulus mod p).
class ResidueElement {
public:
    ResidueElement(Context ctx, std::vector<long> coeffs);
    static ResidueElement from_integer(Context ctx, long a);

    const Context& context() const noexcept { return ctx_; }
    const std::vector<long>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// Frobenius fixed point: r^p == r.
    bool in_prime_field() const;
    /// Index sum c_i p^i, a bijection onto [0, p^f).
    long index() const noexcept;

    ResidueElement operator+(const ResidueElement& o) const;
    ResidueElement operator-(const ResidueElement& o) const;
    ResidueElement operator*(const ResidueElement& o) const;
    ResidueElement pow(long e) const;
    ResidueElement inverse() const;

    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    Context ctx_;
    std::vector<long> coeffs_;
};

/// Valuation of x; for a value that is zero to absolute precision A the
/// answer is the bound "v >= A".
struct Valuation {
    long value;
    bool lower_bound;
};

Valuation valuation(const PadicNumber& x);

/// Characteristic function of {|x|_p >= 1}: 1 iff v(x) <= 0. Zeros to
/// absolute precision A >= 1 certify chi = 0; A <= 0 is indeterminate.
int chi(const PadicNumber& x);

/// Reduction mod the maximal ideal; requires v(x) >= 0.
ResidueElement residue(const PadicNumber& x);

/// Whether the residue of x lies in F_p.
bool residue_in_Fp(const PadicNumber& x);

/// The integer 1 <= l <= p congruent to x mod the maximal ideal; requires
/// v(x) >= 0 and a residue in F_p. Residue 0 maps to p.
long ell(const PadicNumber& x);

/// (x + p - ell(x)) / p; on Z_p this is ceil(x / p).
PadicNumber dwork_shift(const PadicNumber& x);

/// Teichmuller representative: omega^(p^f) = omega and omega = x mod p.
/// Requires v(x) = 0.
PadicNumber teichmuller(const PadicNumber& x);

/// W_p = {v(x) < 0} union {v(x) >= 0 and residue not in F_p}.
bool in_Wp(const PadicNumber& x);

namespace detail {
struct TeichmullerEntry;
/// Cached Teichmuller data for a residue class (by ResidueElement::index()).
const TeichmullerEntry& teichmuller_entry(const PadicContext& ctx, long residue_index);
}  // namespace detail

}  // namespace padic
