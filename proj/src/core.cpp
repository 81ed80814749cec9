#include "padic/core.hpp"

#include <sstream>

#include "padic/detail/caches.hpp"
#include "padic/detail/poly_ring.hpp"
#include "padic/errors.hpp"

namespace padic {

using detail::Coeffs;
using detail::PolyRing;

namespace {

Coeffs to_coeffs(const std::vector<long>& c) {
    Coeffs r;
    r.reserve(c.size());
    for (long v : c) r.emplace_back(v);
    return r;
}

std::vector<long> from_coeffs(const Coeffs& c) {
    std::vector<long> r;
    r.reserve(c.size());
    for (const auto& v : c) r.push_back(v.get_si());
    return r;
}

void require_determinate(const PadicNumber& x, const char* what) {
    if (x.is_zero() && x.valuation() <= 0) {
        throw IndeterminateError(std::string(what) + ": value is zero only to absolute precision " +
                                 std::to_string(x.valuation()));
    }
}

}  // namespace

ResidueElement::ResidueElement(Context ctx, std::vector<long> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    const long p = ctx_->prime();
    coeffs_.resize(static_cast<std::size_t>(ctx_->degree()), 0);
    for (auto& c : coeffs_) {
        c %= p;
        if (c < 0) c += p;
    }
}

ResidueElement ResidueElement::from_integer(Context ctx, long a) {
    return ResidueElement(std::move(ctx), {a});
}

bool ResidueElement::is_zero() const noexcept {
    for (long c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool ResidueElement::in_prime_field() const {
    return pow(ctx_->prime()) == *this;
}

long ResidueElement::index() const noexcept {
    long idx = 0;
    long scale = 1;
    for (long c : coeffs_) {
        idx += c * scale;
        scale *= ctx_->prime();
    }
    return idx;
}

ResidueElement ResidueElement::operator+(const ResidueElement& o) const {
    std::vector<long> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] + o.coeffs_[i];
    return ResidueElement(ctx_, std::move(r));
}

ResidueElement ResidueElement::operator-(const ResidueElement& o) const {
    std::vector<long> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] - o.coeffs_[i];
    return ResidueElement(ctx_, std::move(r));
}

ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
    const PolyRing ring(*ctx_, 1);
    return ResidueElement(ctx_, from_coeffs(ring.mul(to_coeffs(coeffs_), to_coeffs(o.coeffs_))));
}

ResidueElement ResidueElement::pow(long e) const {
    const PolyRing ring(*ctx_, 1);
    if (e < 0) return inverse().pow(-e);
    return ResidueElement(ctx_, from_coeffs(ring.pow(to_coeffs(coeffs_), mpz_class(e))));
}

ResidueElement ResidueElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in the residue field");
    return pow(ctx_->residue_field_size() - 2);
}

std::string ResidueElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        out << coeffs_[i];
        if (i >= 1) out << "*g";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Valuation valuation(const PadicNumber& x) {
    return {x.valuation(), x.is_zero()};
}

int chi(const PadicNumber& x) {
    if (x.is_zero()) {
        if (x.valuation() >= 1) return 0;
        throw IndeterminateError("chi: value is zero only to absolute precision " + std::to_string(x.valuation()));
    }
    return x.valuation() <= 0 ? 1 : 0;
}

ResidueElement residue(const PadicNumber& x) {
    require_determinate(x, "residue");
    const Context& ctx = x.context();
    if (x.is_zero() || x.valuation() > 0) return ResidueElement(ctx, {});
    if (x.valuation() < 0) throw DomainError("residue: value has negative valuation");
    std::vector<long> c;
    const unsigned long p = static_cast<unsigned long>(ctx->prime());
    for (const auto& u : x.unit()) c.push_back(static_cast<long>(mpz_fdiv_ui(u.get_mpz_t(), p)));
    return ResidueElement(ctx, std::move(c));
}

bool residue_in_Fp(const PadicNumber& x) {
    return residue(x).in_prime_field();
}

long ell(const PadicNumber& x) {
    const ResidueElement r = residue(x);
    if (!r.in_prime_field()) throw DomainError("ell: residue is not in F_p");
    const long a = r.coefficients()[0];
    return a == 0 ? x.prime() : a;
}

PadicNumber dwork_shift(const PadicNumber& x) {
    const long l = ell(x);
    return (x + (x.prime() - l)).shifted(-1);
}

namespace detail {

const TeichmullerEntry& teichmuller_entry(const PadicContext& ctx, long residue_index) {
    auto& caches = ctx.caches();
    {
        std::lock_guard<std::mutex> lock(caches.mutex);
        auto it = caches.teichmuller.find(residue_index);
        if (it != caches.teichmuller.end()) return *it->second;
    }
    const long p = ctx.prime();
    const long q = ctx.residue_field_size();
    const PolyRing ring(ctx, ctx.precision());
    Coeffs y(static_cast<std::size_t>(ctx.degree()));
    long rest = residue_index;
    for (auto& c : y) {
        c = rest % p;
        rest /= p;
    }
    if (ring.is_zero(y)) throw DomainError("Teichmuller lift of a non-unit");
    // Newton iteration for y^q - y = 0; the derivative q y^(q-1) - 1 is a unit.
    const mpz_class qm1 = q - 1;
    for (int iter = 0; iter < 128; ++iter) {
        const Coeffs yq1 = ring.pow(y, qm1);
        const Coeffs t = ring.sub(ring.mul(yq1, y), y);
        if (ring.is_zero(t)) break;
        const Coeffs d = ring.sub(ring.scale(yq1, mpz_class(q)), ring.one());
        y = ring.sub(y, ring.mul(t, ring.inverse_unit(d)));
    }
    auto entry = std::make_shared<TeichmullerEntry>();
    entry->omega_inverse = ring.pow(y, mpz_class(q - 2));
    entry->omega = std::move(y);
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto [it, inserted] = caches.teichmuller.emplace(residue_index, std::move(entry));
    return *it->second;
}

}  // namespace detail

PadicNumber teichmuller(const PadicNumber& x) {
    if (x.is_zero() || x.valuation() != 0) throw DomainError("teichmuller: input must be a unit");
    const Context& ctx = x.context();
    const auto& entry = detail::teichmuller_entry(*ctx, detail::residue_index(x.unit(), ctx->prime()));
    return PadicNumber::from_parts(ctx, 0, entry.omega, x.relative_precision());
}

bool in_Wp(const PadicNumber& x) {
    require_determinate(x, "in_Wp");
    if (!x.is_zero() && x.valuation() < 0) return true;
    return !residue_in_Fp(x);
}

}  // namespace padic
