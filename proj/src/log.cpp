#include "padic/log.hpp"

#include "padic/core.hpp"
#include "padic/detail/caches.hpp"
#include "padic/detail/poly_ring.hpp"
#include "padic/errors.hpp"

namespace padic {

namespace {

long floor_log(long p, long k) {
    long e = 0;
    for (long q = p; q <= k; q *= p) ++e;
    return e;
}

}  // namespace

long log_series_terms(long p, long vz, long target) {
    if (vz < 1) throw InvalidArgument("log series needs an argument of positive valuation");
    // k * vz - floor(log_p k) is non-decreasing in k once vz >= 1.
    long k = 0;
    while ((k + 1) * vz - floor_log(p, k + 1) < target) ++k;
    return k;
}

PadicNumber log_p(const PadicNumber& x) {
    if (x.is_zero()) throw IndeterminateError("log_p of a value indistinguishable from zero");
    const Context& ctx = x.context();
    const long p = ctx->prime();
    const PadicNumber u = x.shifted(-x.valuation());
    const auto& entry = detail::teichmuller_entry(*ctx, detail::residue_index(u.unit(), p));
    PadicNumber u1 = u * PadicNumber::from_parts(ctx, 0, entry.omega_inverse, u.relative_precision());
    if (p == 2) u1 = u1 * u1;
    const PadicNumber z = u1 - 1L;
    PadicNumber sum = z;
    if (!z.is_zero()) {
        const long terms = log_series_terms(p, z.valuation(), z.absolute_precision());
        PadicNumber power = z;
        for (long k = 2; k <= terms; ++k) {
            power *= z;
            const PadicNumber term = power.divided_by_integer(k);
            if (k % 2 == 0) {
                sum -= term;
            } else {
                sum += term;
            }
        }
    }
    if (p == 2) sum = sum.divided_by_integer(2);
    return sum;
}

}  // namespace padic
