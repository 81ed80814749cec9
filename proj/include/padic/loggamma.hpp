#pragma once

#include <gmpxx.h>

#include <vector>

#include "padic/number.hpp"
#include "padic/volkenborn.hpp"

namespace padic {

/// phi_p(x) = 0 if v(x) >= 1, else x (log_p x - 1).
PadicNumber phi_p(const PadicNumber& x);

/// Integrand of the derivative: chi(x) log_p(x), with the convention that it
/// vanishes whenever chi(x) = 0.
PadicNumber chi_log(const PadicNumber& x);

/// LGamma_p(x) = integral of phi_p(x + t) dt, defined on every supported x.
IntegralResult lp(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers = 1);

/// d/dx LGamma_p(x) = integral of chi(x + t) log_p(x + t) dt.
IntegralResult lp_prime(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers = 1);

/// Whether x is certified to lie outside Z_p: v(x) < 0, or some unit
/// coefficient of degree >= 1 is non-zero.
bool certified_outside_Zp(const PadicNumber& x);

/// Diamond's LGamma_D(x) = integral of (x + t)(log_p(x + t) - 1) dt for
/// certified x outside Z_p; DomainError otherwise.
IntegralResult ld(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers = 1);

/// Morita's LGamma_M on Z_p: requires a value of Q_p (no g-terms) with
/// v(x) >= 0, and returns the same integral as lp.
IntegralResult lm(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers = 1);

/// lambda_1 = integral of chi_{Z_p^*}(t) log_p(t) dt and
/// lambda_{k+1} = integral of chi_{Z_p^*}(t) t^-k dt.
struct LambdaTable {
    Context ctx;
    ConvergencePolicy policy;
    /// entries[k - 1] = lambda_k.
    std::vector<IntegralResult> entries;
};

/// Smallest K >= 2 * target whose series tail bound reaches target for every
/// v(x) >= 1, assuming lambda valuations of at least -1.
long default_lambda_terms(long p, long target);

/// K defaults to default_lambda_terms(p, policy.target) when zero.
LambdaTable lambda_table(const Context& ctx, long K, const ConvergencePolicy& policy, unsigned workers = 1);

struct SeriesValue {
    PadicNumber value;
    /// min(tail bound, tracked precision of the truncated sum).
    long achieved = 0;
    long tail_bound = 0;
    long terms = 0;
};

/// lambda_1 x + sum_{n >= 1} (-1)^(n+1) lambda_{n+1} x^(n+1) / (n (n+1)) for
/// v(x) >= 1, using every coefficient of the table. The tail from n = K on
/// is bounded by (n+1) v(x) - floor(log_p(n(n+1))) + min(-1, min v(lambda)).
/// Throws DomainError for v(x) < 1 and InvalidArgument when that bound
/// stays below the table's target.
SeriesValue lm_series(const PadicNumber& x, const LambdaTable& table);

/// Morita's Gamma_M(n) = (-1)^n prod_{1 <= j < n, p does not divide j} j.
mpz_class morita_gamma_nat(long p, long n);

/// Closed form of R_P: x - x/p + a/p - ceil(a/p) when x = a (mod the maximal
/// ideal) for an integer 0 <= a < p, and x - 1/2 otherwise.
PadicNumber rp_closed(const PadicNumber& x);

/// R_P as the integral of (x + t) chi(x + t) dt.
IntegralResult rp_integral(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers = 1);

}  // namespace padic
