#include "padic/detail/poly_ring.hpp"

#include "padic/errors.hpp"

namespace padic::detail {

PolyRing::PolyRing(const PadicContext& ctx, long digits)
    : ctx_(ctx), digits_(digits), f_(ctx.degree()) {
    if (digits <= 2 * ctx.precision() + 8) {
        pk_ = ctx.prime_power(digits);
    } else {
        mpz_ui_pow_ui(pk_.get_mpz_t(), static_cast<unsigned long>(ctx.prime()),
                      static_cast<unsigned long>(digits));
    }
}

void PolyRing::reduce(Coeffs& a) const {
    for (auto& c : a) mod_in_place(c, pk_);
}

Coeffs PolyRing::one() const {
    Coeffs r(static_cast<std::size_t>(f_));
    r[0] = pk_ == 1 ? 0 : 1;
    return r;
}

Coeffs PolyRing::constant(const mpz_class& c) const {
    Coeffs r(static_cast<std::size_t>(f_));
    r[0] = c;
    mod_in_place(r[0], pk_);
    return r;
}

Coeffs PolyRing::add(const Coeffs& a, const Coeffs& b) const {
    Coeffs r(static_cast<std::size_t>(f_));
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= pk_) r[i] -= pk_;
    }
    return r;
}

Coeffs PolyRing::sub(const Coeffs& a, const Coeffs& b) const {
    Coeffs r(static_cast<std::size_t>(f_));
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += pk_;
    }
    return r;
}

Coeffs PolyRing::mul(const Coeffs& a, const Coeffs& b) const {
    if (f_ == 1) {
        Coeffs r(1);
        mpz_mul(r[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
        mod_in_place(r[0], pk_);
        return r;
    }
    const std::size_t f = static_cast<std::size_t>(f_);
    Coeffs t(2 * f - 1);
    for (std::size_t i = 0; i < f; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < f; ++j) {
            mpz_addmul(t[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    // g^f = -(c_0 + c_1 g + ... + c_{f-1} g^{f-1})
    const auto& m = ctx_.modulus();
    for (std::size_t d = 2 * f - 2; d >= f; --d) {
        if (t[d] == 0) continue;
        mod_in_place(t[d], pk_);
        for (std::size_t i = 0; i < f; ++i) {
            if (m[i] != 0) t[d - f + i] -= t[d] * m[i];
        }
    }
    t.resize(f);
    reduce(t);
    return t;
}

Coeffs PolyRing::scale(const Coeffs& a, const mpz_class& c) const {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_mul(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
        mod_in_place(r[i], pk_);
    }
    return r;
}

Coeffs PolyRing::pow(const Coeffs& a, const mpz_class& e) const {
    if (e < 0) return pow(inverse_unit(a), -e);
    Coeffs result = one();
    Coeffs base = a;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
        if (i + 1 < bits) base = mul(base, base);
    }
    return result;
}

bool PolyRing::is_zero(const Coeffs& a) const {
    for (const auto& c : a) {
        if (c != 0) return false;
    }
    return true;
}

Coeffs PolyRing::inverse_unit(const Coeffs& a) const {
    if (f_ == 1) {
        Coeffs r(1);
        if (mpz_invert(r[0].get_mpz_t(), a[0].get_mpz_t(), pk_.get_mpz_t()) == 0) {
            throw IndeterminateError("inverse of a non-unit");
        }
        return r;
    }
    const PolyRing residue_ring(ctx_, 1);
    Coeffs a_mod_p = a;
    residue_ring.reduce(a_mod_p);
    if (residue_ring.is_zero(a_mod_p)) throw IndeterminateError("inverse of a non-unit");
    Coeffs y = residue_ring.pow(a_mod_p, mpz_class(ctx_.residue_field_size() - 2));
    const Coeffs two = constant(2);
    for (long known = 1; known < digits_; known *= 2) {
        y = mul(y, sub(two, mul(a, y)));
    }
    return y;
}

long residue_index(const Coeffs& a, long p) {
    long index = 0;
    long scale = 1;
    for (const auto& c : a) {
        index += static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))) * scale;
        scale *= p;
    }
    return index;
}

long remove_p(mpz_class& a, const mpz_class& p) {
    if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) return 0;
    return static_cast<long>(mpz_remove(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

long valuation_of(const mpz_class& a, const mpz_class& p) {
    mpz_class copy = a;
    return remove_p(copy, p);
}

}  // namespace padic::detail
