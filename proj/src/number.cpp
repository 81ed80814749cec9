#include "padic/number.hpp"

#include <algorithm>
#include <sstream>

#include "padic/detail/poly_ring.hpp"
#include "padic/errors.hpp"

namespace padic {

using detail::Coeffs;
using detail::PolyRing;

namespace {

void require_same_field(const Context& a, const Context& b) {
    if (a.get() != b.get() && !a->same_field(*b)) {
        throw InvalidArgument("operands belong to different fields");
    }
}

// Unit part of a non-zero integer a / b modulo p^digits, valuation removed.
mpz_class rational_unit(const PadicContext& ctx, mpz_class num, mpz_class den, long digits, long& v) {
    const mpz_class& p = ctx.prime_mpz();
    v = detail::remove_p(num, p) - detail::remove_p(den, p);
    const mpz_class& pk = ctx.prime_power(digits);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t());
    mpz_class u = num * inv;
    detail::mod_in_place(u, pk);
    return u;
}

}  // namespace

PadicNumber::PadicNumber(Context ctx, long v, long prec, bool exact, std::vector<mpz_class> unit)
    : ctx_(std::move(ctx)), val_(v), prec_(prec), exact_(exact), unit_(std::move(unit)) {}

PadicNumber PadicNumber::zero(Context ctx) {
    return PadicNumber(std::move(ctx), kExactPrecision, 0, true, {});
}

PadicNumber PadicNumber::zero_to(Context ctx, long absolute_precision) {
    return PadicNumber(std::move(ctx), absolute_precision, 0, false, {});
}

PadicNumber PadicNumber::one(Context ctx) {
    return from_integer(std::move(ctx), 1L);
}

PadicNumber PadicNumber::from_integer(Context ctx, const mpz_class& a) {
    return from_rational(std::move(ctx), a, mpz_class(1));
}

PadicNumber PadicNumber::from_rational(Context ctx, const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw InvalidArgument("rational with zero denominator");
    if (a == 0) return zero(std::move(ctx));
    long v = 0;
    const long prec = ctx->precision();
    std::vector<mpz_class> unit(static_cast<std::size_t>(ctx->degree()));
    unit[0] = rational_unit(*ctx, a, b, prec, v);
    return PadicNumber(std::move(ctx), v, prec, false, std::move(unit));
}

PadicNumber PadicNumber::from_rational(Context ctx, const mpq_class& q) {
    return from_rational(std::move(ctx), q.get_num(), q.get_den());
}

PadicNumber PadicNumber::from_poly(Context ctx, std::span<const mpq_class> coeffs) {
    const std::size_t f = static_cast<std::size_t>(ctx->degree());
    if (coeffs.size() > f) {
        throw InvalidArgument("polynomial has more coefficients than the extension degree");
    }
    const long prec = ctx->precision();
    std::vector<long> vals(coeffs.size(), 0);
    std::vector<mpz_class> units(coeffs.size());
    bool any = false;
    long vmin = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        units[i] = rational_unit(*ctx, coeffs[i].get_num(), coeffs[i].get_den(), prec, vals[i]);
        vmin = any ? std::min(vmin, vals[i]) : vals[i];
        any = true;
    }
    if (!any) return zero(std::move(ctx));
    std::vector<mpz_class> unit(f);
    const mpz_class& pk = ctx->prime_power(prec);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const long shift = vals[i] - vmin;
        if (shift >= prec) continue;
        unit[i] = units[i] * ctx->prime_power(shift);
        detail::mod_in_place(unit[i], pk);
    }
    return PadicNumber(std::move(ctx), vmin, prec, false, std::move(unit));
}

PadicNumber PadicNumber::generator(Context ctx) {
    if (ctx->degree() < 2) throw InvalidArgument("the generator g needs an extension of degree >= 2");
    std::vector<mpq_class> c(2);
    c[1] = 1;
    return from_poly(std::move(ctx), c);
}

PadicNumber PadicNumber::from_parts(Context ctx, long v, std::vector<mpz_class> coeffs, long digits) {
    if (digits <= 0) return zero_to(std::move(ctx), v + digits);
    coeffs.resize(static_cast<std::size_t>(ctx->degree()));
    const mpz_class& p = ctx->prime_mpz();
    const mpz_class& pk = ctx->prime_power(digits);
    long k = digits;
    for (auto& c : coeffs) {
        detail::mod_in_place(c, pk);
        if (c != 0) k = std::min(k, detail::valuation_of(c, p));
    }
    if (k >= digits) return zero_to(std::move(ctx), v + digits);
    if (k > 0) {
        const mpz_class& pkk = ctx->prime_power(k);
        for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pkk.get_mpz_t());
    }
    const long prec = std::min(digits - k, ctx->precision());
    if (prec < digits - k) {
        const mpz_class& pp = ctx->prime_power(prec);
        for (auto& c : coeffs) detail::mod_in_place(c, pp);
    }
    return PadicNumber(std::move(ctx), v + k, prec, false, std::move(coeffs));
}

long PadicNumber::prime() const noexcept { return ctx_->prime(); }

long PadicNumber::absolute_precision() const noexcept {
    if (exact_) return kExactPrecision;
    return val_ + prec_;
}

bool PadicNumber::is_rational() const noexcept {
    for (std::size_t i = 1; i < unit_.size(); ++i) {
        if (unit_[i] != 0) return false;
    }
    return true;
}

PadicNumber PadicNumber::with_absolute_precision(long a) const {
    if (exact_) return zero_to(ctx_, a);
    if (is_zero()) return a < val_ ? zero_to(ctx_, a) : *this;
    if (a <= val_) return zero_to(ctx_, a);
    if (a >= val_ + prec_) return *this;
    const long prec = a - val_;
    std::vector<mpz_class> unit = unit_;
    const mpz_class& pk = ctx_->prime_power(prec);
    for (auto& c : unit) detail::mod_in_place(c, pk);
    return PadicNumber(ctx_, val_, prec, false, std::move(unit));
}

PadicNumber PadicNumber::shifted(long k) const {
    if (exact_) return *this;
    PadicNumber r = *this;
    r.val_ += k;
    return r;
}

PadicNumber PadicNumber::divided_by_integer(long k) const {
    if (k == 0) throw IndeterminateError("division by zero");
    if (exact_) return *this;
    mpz_class kk = k;
    const long vk = detail::remove_p(kk, ctx_->prime_mpz());
    if (is_zero()) return zero_to(ctx_, val_ - vk);
    const PolyRing ring(*ctx_, prec_);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), kk.get_mpz_t(), ring.modulus_power().get_mpz_t());
    return PadicNumber(ctx_, val_ - vk, prec_, false, ring.scale(unit_, inv));
}

PadicNumber PadicNumber::times_integer(const mpz_class& k) const {
    if (k == 0 || exact_) return zero(ctx_);
    mpz_class kk = k;
    const long vk = detail::remove_p(kk, ctx_->prime_mpz());
    if (is_zero()) return zero_to(ctx_, val_ + vk);
    const PolyRing ring(*ctx_, prec_);
    return PadicNumber(ctx_, val_ + vk, prec_, false, ring.scale(unit_, kk));
}

PadicNumber PadicNumber::pow(long e) const {
    if (e == 0) return one(ctx_);
    if (e < 0) {
        if (is_zero()) throw IndeterminateError("negative power of a value indistinguishable from zero");
        return (one(ctx_) / *this).pow(-e);
    }
    if (exact_) return *this;
    if (is_zero()) return zero_to(ctx_, val_ * e);
    const PolyRing ring(*ctx_, prec_);
    return PadicNumber(ctx_, val_ * e, prec_, false, ring.pow(unit_, mpz_class(e)));
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    const mpz_class& pk = ctx_->prime_power(prec_);
    std::vector<mpz_class> unit(unit_.size());
    for (std::size_t i = 0; i < unit.size(); ++i) {
        if (unit_[i] != 0) unit[i] = pk - unit_[i];
    }
    return PadicNumber(ctx_, val_, prec_, false, std::move(unit));
}

PadicNumber& PadicNumber::operator+=(const PadicNumber& o) {
    require_same_field(ctx_, o.ctx_);
    if (o.exact_) return *this;
    if (exact_) {
        Context keep = ctx_;
        *this = o;
        ctx_ = std::move(keep);
        return *this;
    }
    const long a = std::min(absolute_precision(), o.absolute_precision());
    if (is_zero() && o.is_zero()) return *this = zero_to(ctx_, a);
    const long vmin = is_zero() ? o.val_ : (o.is_zero() ? val_ : std::min(val_, o.val_));
    if (a <= vmin) return *this = zero_to(ctx_, a);
    const long digits = a - vmin;
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(ctx_->degree()));
    for (const PadicNumber* term : {static_cast<const PadicNumber*>(this), &o}) {
        if (term->is_zero()) continue;
        const long shift = term->val_ - vmin;
        if (shift >= digits) continue;
        if (shift == 0) {
            for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += term->unit_[i];
        } else {
            const mpz_class& ps = ctx_->prime_power(shift);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                mpz_addmul(coeffs[i].get_mpz_t(), term->unit_[i].get_mpz_t(), ps.get_mpz_t());
            }
        }
    }
    return *this = from_parts(ctx_, vmin, std::move(coeffs), digits);
}

PadicNumber& PadicNumber::operator-=(const PadicNumber& o) {
    return *this += -o;
}

PadicNumber& PadicNumber::operator*=(const PadicNumber& o) {
    require_same_field(ctx_, o.ctx_);
    if (exact_ || o.exact_) return *this = zero(ctx_);
    if (is_zero() || o.is_zero()) return *this = zero_to(ctx_, val_ + o.val_);
    const long prec = std::min(prec_, o.prec_);
    const PolyRing ring(*ctx_, prec);
    unit_ = ring.mul(unit_, o.unit_);
    val_ += o.val_;
    prec_ = prec;
    return *this;
}

PadicNumber& PadicNumber::operator/=(const PadicNumber& o) {
    require_same_field(ctx_, o.ctx_);
    if (o.is_zero()) throw IndeterminateError("division by a value indistinguishable from zero");
    if (exact_) return *this;
    if (is_zero()) return *this = zero_to(ctx_, val_ - o.val_);
    const long prec = std::min(prec_, o.prec_);
    const PolyRing ring(*ctx_, prec);
    unit_ = ring.mul(unit_, ring.inverse_unit(o.unit_));
    val_ -= o.val_;
    prec_ = prec;
    return *this;
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
    return a.ctx_->same_field(*b.ctx_) && a.exact_ == b.exact_ && a.val_ == b.val_ &&
           a.prec_ == b.prec_ && a.unit_ == b.unit_;
}

std::string PadicNumber::to_string() const {
    if (exact_) return "0";
    std::ostringstream out;
    if (is_zero()) {
        out << "O(" << ctx_->prime() << "^" << val_ << ")";
        return out.str();
    }
    out << ctx_->prime() << "^" << val_ << " * (";
    bool first = true;
    for (std::size_t i = 0; i < unit_.size(); ++i) {
        if (unit_[i] == 0) continue;
        if (!first) out << " + ";
        out << unit_[i].get_str();
        if (i >= 1) out << "*g";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    out << ")";
    return out.str();
}

std::string PadicNumber::to_string_with_precision() const {
    if (exact_ || is_zero()) return to_string();
    return to_string() + " + O(" + std::to_string(ctx_->prime()) + "^" + std::to_string(absolute_precision()) + ")";
}

std::vector<std::vector<long>> PadicNumber::digits() const {
    std::vector<std::vector<long>> out;
    const unsigned long p = static_cast<unsigned long>(ctx_->prime());
    for (const auto& c : unit_) {
        std::vector<long> d;
        mpz_class rest = c;
        for (long i = 0; i < prec_; ++i) {
            d.push_back(static_cast<long>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p)));
        }
        out.push_back(std::move(d));
    }
    return out;
}

PadicNumber operator+(PadicNumber a, const PadicNumber& b) { return a += b; }
PadicNumber operator-(PadicNumber a, const PadicNumber& b) { return a -= b; }
PadicNumber operator*(PadicNumber a, const PadicNumber& b) { return a *= b; }
PadicNumber operator/(PadicNumber a, const PadicNumber& b) { return a /= b; }

PadicNumber operator+(const PadicNumber& a, long b) {
    return a + PadicNumber::from_integer(a.context(), b);
}

PadicNumber operator-(const PadicNumber& a, long b) {
    return a - PadicNumber::from_integer(a.context(), b);
}

PadicNumber operator-(long a, const PadicNumber& b) {
    return PadicNumber::from_integer(b.context(), a) - b;
}

PadicNumber operator*(const PadicNumber& a, long b) {
    return a.times_integer(mpz_class(b));
}

long residual_valuation(const PadicNumber& a, const PadicNumber& b) {
    return (a - b).valuation();
}

bool agrees(const PadicNumber& a, const PadicNumber& b) {
    return (a - b).is_zero();
}

}  // namespace padic
