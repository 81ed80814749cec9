#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace padic {

class PadicContext;
using Context = std::shared_ptr<const PadicContext>;

namespace detail {
struct ContextCaches;
}

/// The field Q_p or its unramified extension of degree f, presented as
/// Z_p[g] / (modulus(g)) where the modulus is monic and irreducible mod p.
///
/// A context is immutable once created; values refer to it through a shared
/// handle, so a context outlives every value built from it. The precision is
/// the number of relative p-adic digits carried by freshly built values.
class PadicContext {
public:
    /// Validates p (deterministic primality test), f >= 1, rel_prec >= 1 and
    /// the modulus (monic, degree f, irreducible over F_p). When no modulus is
    /// given the deterministic default of default_modulus() is used.
    static Context create(long p, int f, long rel_prec,
                          std::optional<std::vector<long>> modulus = std::nullopt);

    ~PadicContext();
    PadicContext(const PadicContext&) = delete;
    PadicContext& operator=(const PadicContext&) = delete;

    long prime() const noexcept { return p_; }
    int degree() const noexcept { return f_; }
    long precision() const noexcept { return prec_; }

    /// Coefficients c_0 .. c_f of the monic modulus, c_f = 1.
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    /// p^f, the size of the residue field.
    long residue_field_size() const noexcept { return q_; }

    const mpz_class& prime_mpz() const noexcept { return powers_[1]; }

    /// p^k for 0 <= k <= 2 * precision() + 8.
    const mpz_class& prime_power(long k) const;

    /// Same field and modulus, different relative precision.
    Context with_precision(long rel_prec) const;

    /// True when both contexts describe the same ring (precision ignored).
    bool same_field(const PadicContext& other) const noexcept;

    /// e.g. "Q_5(g), g^2 - 2, prec 20".
    std::string describe() const;

    /// Renders the modulus as a polynomial in g.
    std::string modulus_string() const;

    detail::ContextCaches& caches() const { return *caches_; }

private:
    PadicContext(long p, int f, long prec, std::vector<long> modulus);

    long p_;
    int f_;
    long prec_;
    long q_;
    std::vector<long> modulus_;
    std::vector<mpz_class> powers_;
    std::unique_ptr<detail::ContextCaches> caches_;
};

/// Deterministic trial-division primality test.
bool is_prime(long n);

/// Default modulus used when none is supplied:
///   f = 1: g;
///   f = 2: g^2 - a with a the least positive quadratic non-residue mod p,
///          and g^2 + g + 1 for p = 2;
///   f >= 3: the first irreducible g^f + c_{f-1} g^{f-1} + ... + c_0 when the
///          tuples (c_{f-1}, ..., c_0) in [0, p)^f are scanned lexicographically.
std::vector<long> default_modulus(long p, int f);

/// Irreducibility of a monic integer polynomial reduced mod p, by the
/// gcd(g^(p^i) - g, m) = 1 criterion for 1 <= i <= deg/2.
bool is_irreducible_mod_p(const std::vector<long>& monic, long p);

}  // namespace padic
