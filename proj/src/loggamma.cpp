#include "padic/loggamma.hpp"

#include <algorithm>

#include "padic/core.hpp"
#include "padic/errors.hpp"
#include "padic/log.hpp"

namespace padic {

PadicNumber phi_p(const PadicNumber& x) {
    if (chi(x) == 0) return PadicNumber::zero(x.context());
    return x * (log_p(x) - 1L);
}

PadicNumber chi_log(const PadicNumber& x) {
    if (chi(x) == 0) return PadicNumber::zero(x.context());
    return log_p(x);
}

IntegralResult lp(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers) {
    return integrate(phi_p, x, policy, workers);
}

IntegralResult lp_prime(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers) {
    return integrate(chi_log, x, policy, workers);
}

bool certified_outside_Zp(const PadicNumber& x) {
    if (x.is_zero()) return false;
    return x.valuation() < 0 || !x.is_rational();
}

IntegralResult ld(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers) {
    if (!certified_outside_Zp(x)) {
        throw DomainError("LGamma_D needs an argument certified outside Z_p");
    }
    const auto integrand = [](const PadicNumber& y) { return y * (log_p(y) - 1L); };
    return integrate(integrand, x, policy, workers);
}

IntegralResult lm(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers) {
    if (!x.is_rational() || x.valuation() < 0) {
        throw DomainError("LGamma_M needs an argument certified in Z_p");
    }
    return lp(x, policy, workers);
}

namespace {

long floor_log(long p, long k) {
    long e = 0;
    for (long q = p; q <= k; q *= p) ++e;
    return e;
}

long tail_bound(long p, long K, long vx, long lambda_floor) {
    // (n + 1) v(x) grows by at least one per step, so the minimum sits
    // within a few multiples of K.
    long tail = kExactPrecision;
    for (long n = K; n <= 4 * K + 64; ++n) {
        tail = std::min(tail, (n + 1) * vx - floor_log(p, n * (n + 1)) + lambda_floor);
    }
    return tail;
}

}  // namespace

long default_lambda_terms(long p, long target) {
    long K = 2 * target;
    while (tail_bound(p, K, 1, -1) < target) ++K;
    return K;
}

LambdaTable lambda_table(const Context& ctx, long K, const ConvergencePolicy& policy, unsigned workers) {
    if (K == 0) K = default_lambda_terms(ctx->prime(), policy.target);
    if (K < 1) throw InvalidArgument("lambda table needs K >= 1");
    LambdaTable table{ctx, policy, {}};
    const PadicNumber origin = PadicNumber::zero(ctx);
    const auto is_unit = [](const PadicNumber& t) { return !t.is_zero() && t.valuation() == 0; };
    table.entries.push_back(integrate(
        [&](const PadicNumber& t) { return is_unit(t) ? log_p(t) : PadicNumber::zero(t.context()); }, origin,
        policy, workers));
    for (long k = 1; k < K; ++k) {
        table.entries.push_back(integrate(
            [&](const PadicNumber& t) { return is_unit(t) ? t.pow(-k) : PadicNumber::zero(t.context()); }, origin,
            policy, workers));
    }
    return table;
}

SeriesValue lm_series(const PadicNumber& x, const LambdaTable& table) {
    const long vx = x.valuation();
    if (vx < 1) throw DomainError("the Morita series needs v(x) >= 1");
    const Context& ctx = x.context();
    const long p = ctx->prime();
    const long K = static_cast<long>(table.entries.size());

    std::vector<PadicNumber> lambda;
    long lambda_floor = -1;
    for (const auto& e : table.entries) {
        lambda.push_back(e.value.with_absolute_precision(e.achieved));
        lambda_floor = std::min(lambda_floor, lambda.back().valuation());
    }

    const long tail = tail_bound(p, K, vx, lambda_floor);
    if (tail < table.policy.target) {
        throw InvalidArgument("lambda table too short for the requested precision");
    }

    PadicNumber sum = lambda[0] * x;
    PadicNumber power = x;
    for (long n = 1; n < K; ++n) {
        power *= x;
        const PadicNumber term = (lambda[static_cast<std::size_t>(n)] * power).divided_by_integer(n * (n + 1));
        if (n % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    SeriesValue out{sum, std::min(tail, sum.absolute_precision()), tail, K};
    return out;
}

mpz_class morita_gamma_nat(long p, long n) {
    if (n < 1) throw InvalidArgument("Gamma_M(n) needs n >= 1");
    mpz_class product = 1;
    for (long j = 1; j < n; ++j) {
        if (j % p != 0) product *= j;
    }
    return n % 2 == 0 ? product : mpz_class(-product);
}

PadicNumber rp_closed(const PadicNumber& x) {
    const Context& ctx = x.context();
    const PadicNumber half = PadicNumber::from_rational(ctx, 1, 2);
    if (!x.is_zero() && x.valuation() < 0) return x - half;
    const ResidueElement r = residue(x);
    if (!r.in_prime_field()) return x - half;
    const long alpha = r.coefficients()[0];
    return x - (x - alpha).shifted(-1) - (alpha > 0 ? 1L : 0L);
}

IntegralResult rp_integral(const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers) {
    const auto integrand = [](const PadicNumber& y) { return chi(y) == 0 ? PadicNumber::zero(y.context()) : y; };
    return integrate(integrand, x, policy, workers);
}

}  // namespace padic
