#include "padic/exact.hpp"

#include <sstream>

#include "padic/detail/poly_ring.hpp"
#include "padic/errors.hpp"

namespace padic {

ExactElement::ExactElement(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

ExactElement ExactElement::rational(const mpq_class& q) {
    return ExactElement(std::vector<mpq_class>{q});
}

ExactElement ExactElement::generator() {
    return ExactElement(std::vector<mpq_class>{0, 1});
}

void ExactElement::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactElement ExactElement::operator+(const ExactElement& o) const {
    std::vector<mpq_class> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return ExactElement(std::move(r));
}

ExactElement ExactElement::operator-() const {
    return scaled(mpq_class(-1));
}

ExactElement ExactElement::operator-(const ExactElement& o) const {
    return *this + (-o);
}

ExactElement ExactElement::scaled(const mpq_class& c) const {
    std::vector<mpq_class> r = coeffs_;
    for (auto& x : r) x *= c;
    return ExactElement(std::move(r));
}

ExactElement ExactElement::times(const ExactElement& o, const PadicContext& ctx) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> t(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) t[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    const std::size_t f = static_cast<std::size_t>(ctx.degree());
    const auto& m = ctx.modulus();
    for (std::size_t d = t.size(); d-- > f;) {
        if (t[d] == 0) continue;
        for (std::size_t i = 0; i < f; ++i) t[d - f + i] -= t[d] * m[i];
        t[d] = 0;
    }
    return ExactElement(std::move(t));
}

PadicNumber ExactElement::to_padic(const Context& ctx) const {
    if (coeffs_.size() > static_cast<std::size_t>(ctx->degree())) {
        throw InvalidArgument("element uses powers of g beyond the extension degree");
    }
    return PadicNumber::from_poly(ctx, coeffs_);
}

std::string ExactElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << "g";
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

namespace {

// a / b with a == b * u (mod m), |a|, b <= bound; b coprime to p.
std::optional<mpq_class> reconstruct_one(const mpz_class& u, const mpz_class& m, const mpz_class& p) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    if (mpz_divisible_p(t1.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

}  // namespace

std::optional<ExactElement> reconstruct_rational(const PadicNumber& x) {
    if (x.is_zero()) {
        if (x.is_exact_zero() || x.valuation() >= 1) return ExactElement();
        return std::nullopt;
    }
    const Context& ctx = x.context();
    const mpz_class& m = ctx->prime_power(x.relative_precision());
    std::vector<mpq_class> coeffs;
    mpq_class scale = 1;
    const long v = x.valuation();
    mpz_class pv;
    mpz_pow_ui(pv.get_mpz_t(), ctx->prime_mpz().get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    scale = v < 0 ? mpq_class(1, pv) : mpq_class(pv);
    scale.canonicalize();
    for (const auto& c : x.unit()) {
        if (c == 0) {
            coeffs.emplace_back(0);
            continue;
        }
        auto q = reconstruct_one(c, m, ctx->prime_mpz());
        if (!q) return std::nullopt;
        coeffs.push_back(*q * scale);
    }
    return ExactElement(std::move(coeffs));
}

}  // namespace padic
