#include "padic/context.hpp"

#include <sstream>
#include <stdexcept>

#include "padic/detail/caches.hpp"
#include "padic/errors.hpp"

namespace padic {

namespace {

using FpPoly = std::vector<long>;

long mod_p(long a, long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

long mul_p(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

long inv_p(long a, long p) {
    long result = 1;
    long base = mod_p(a, p);
    for (long e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = mul_p(result, base, p);
        base = mul_p(base, base, p);
    }
    return result;
}

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_rem(FpPoly a, const FpPoly& m, long p) {
    trim(a);
    const long lead_inv = inv_p(m.back(), p);
    while (a.size() >= m.size()) {
        const long c = mul_p(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = mod_p(a[shift + i] - mul_p(c, m[i], p), p);
        }
        trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly t(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            t[i + j] = mod_p(t[i + j] + mul_p(a[i], b[j], p), p);
        }
    }
    return fp_rem(std::move(t), m, p);
}

FpPoly fp_powmod(FpPoly base, long e, const FpPoly& m, long p) {
    FpPoly result{1};
    base = fp_rem(std::move(base), m, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) result = fp_mulmod(result, base, m, p);
        base = fp_mulmod(base, base, m, p);
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

void validate_modulus(const std::vector<long>& modulus, long p, int f) {
    if (modulus.size() != static_cast<std::size_t>(f) + 1 || modulus.back() != 1) {
        throw InvalidArgument("modulus must be monic of degree " + std::to_string(f));
    }
    if (!is_irreducible_mod_p(modulus, p)) {
        throw InvalidArgument("modulus is reducible mod " + std::to_string(p));
    }
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(const std::vector<long>& monic, long p) {
    FpPoly m;
    m.reserve(monic.size());
    for (long c : monic) m.push_back(mod_p(c, p));
    trim(m);
    if (m.size() < 2) return false;
    const std::size_t deg = m.size() - 1;
    if (deg == 1) return true;
    FpPoly h{0, 1};
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = fp_powmod(h, p, m, p);
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_p(diff[1] - 1, p);
        trim(diff);
        if (diff.empty()) return false;
        if (fp_gcd(m, diff, p).size() > 1) return false;
    }
    return true;
}

std::vector<long> default_modulus(long p, int f) {
    if (f == 1) return {0, 1};
    if (f == 2) {
        if (p == 2) return {1, 1, 1};
        for (long a = 2; a < p; ++a) {
            // Euler's criterion: a^((p-1)/2) = -1 for a non-residue.
            long r = 1;
            long base = a;
            for (long e = (p - 1) / 2; e > 0; e >>= 1) {
                if (e & 1) r = mul_p(r, base, p);
                base = mul_p(base, base, p);
            }
            if (r == p - 1) return {-a, 0, 1};
        }
        throw InvalidArgument("no quadratic non-residue found");
    }
    // Lexicographic scan of (c_{f-1}, ..., c_0).
    std::vector<long> digits(static_cast<std::size_t>(f), 0);
    for (;;) {
        std::vector<long> candidate(static_cast<std::size_t>(f) + 1, 0);
        for (int i = 0; i < f; ++i) candidate[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(f - 1 - i)];
        candidate.back() = 1;
        if (candidate[0] != 0 && is_irreducible_mod_p(candidate, p)) return candidate;
        int pos = f - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) throw InvalidArgument("no irreducible polynomial found");
    }
}

PadicContext::PadicContext(long p, int f, long prec, std::vector<long> modulus)
    : p_(p), f_(f), prec_(prec), q_(1), modulus_(std::move(modulus)),
      caches_(std::make_unique<detail::ContextCaches>()) {
    for (int i = 0; i < f_; ++i) q_ *= p_;
    const long count = 2 * prec_ + 9;
    powers_.reserve(static_cast<std::size_t>(count));
    mpz_class value = 1;
    for (long k = 0; k < count; ++k) {
        powers_.push_back(value);
        value *= p_;
    }
}

PadicContext::~PadicContext() = default;

Context PadicContext::create(long p, int f, long rel_prec, std::optional<std::vector<long>> modulus) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (f < 1) throw InvalidArgument("extension degree must be >= 1");
    if (rel_prec < 1) throw InvalidArgument("relative precision must be >= 1");
    if (rel_prec > 100000) throw InvalidArgument("relative precision too large");
    long q = 1;
    for (int i = 0; i < f; ++i) {
        if (q > (1L << 40) / p) throw InvalidArgument("residue field too large");
        q *= p;
    }
    std::vector<long> m = modulus ? std::move(*modulus) : default_modulus(p, f);
    validate_modulus(m, p, f);
    return Context(new PadicContext(p, f, rel_prec, std::move(m)));
}

const mpz_class& PadicContext::prime_power(long k) const {
    if (k < 0 || k >= static_cast<long>(powers_.size())) {
        throw std::out_of_range("prime_power exponent out of cached range: " + std::to_string(k));
    }
    return powers_[static_cast<std::size_t>(k)];
}

Context PadicContext::with_precision(long rel_prec) const {
    return create(p_, f_, rel_prec, modulus_);
}

bool PadicContext::same_field(const PadicContext& other) const noexcept {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
}

std::string PadicContext::modulus_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = f_; i >= 0; --i) {
        const long c = modulus_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag;
        if (i > 0) {
            out << "g";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::string PadicContext::describe() const {
    std::ostringstream out;
    out << "Q_" << p_;
    if (f_ > 1) out << "(g), " << modulus_string();
    out << ", prec " << prec_;
    return out.str();
}

}  // namespace padic
