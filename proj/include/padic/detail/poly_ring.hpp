#pragma once

#include <gmpxx.h>

#include <vector>

#include "padic/context.hpp"

namespace padic::detail {

using Coeffs = std::vector<mpz_class>;

/// Arithmetic in (Z / p^digits)[g] / (modulus). Coefficients are kept in
/// [0, p^digits); inputs are assumed reduced.
class PolyRing {
public:
    PolyRing(const PadicContext& ctx, long digits);

    long digits() const noexcept { return digits_; }
    const mpz_class& modulus_power() const noexcept { return pk_; }
    int degree() const noexcept { return f_; }

    void reduce(Coeffs& a) const;

    Coeffs one() const;
    Coeffs constant(const mpz_class& c) const;
    Coeffs add(const Coeffs& a, const Coeffs& b) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b) const;
    Coeffs mul(const Coeffs& a, const Coeffs& b) const;
    Coeffs scale(const Coeffs& a, const mpz_class& c) const;
    Coeffs pow(const Coeffs& a, const mpz_class& e) const;

    /// Inverse of an element whose reduction mod p is non-zero: inverse in
    /// F_{p^f} by a^(q-2), then Newton steps y <- y (2 - a y).
    Coeffs inverse_unit(const Coeffs& a) const;

    bool is_zero(const Coeffs& a) const;

private:
    const PadicContext& ctx_;
    long digits_;
    int f_;
    mpz_class pk_;
};

/// Index of the reduction mod p of a coefficient vector, sum (c_i mod p) p^i.
long residue_index(const Coeffs& a, long p);

/// Removes every factor p from a (a != 0), returning the count.
long remove_p(mpz_class& a, const mpz_class& p);

/// v_p of a non-zero integer.
long valuation_of(const mpz_class& a, const mpz_class& p);

/// Non-negative remainder.
inline void mod_in_place(mpz_class& a, const mpz_class& m) {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
}

}  // namespace padic::detail
