#include "padic/volkenborn.hpp"

#include <algorithm>
#include <future>

#include "padic/errors.hpp"

namespace padic {

ConvergencePolicy ConvergencePolicy::defaults(long p, long target) {
    ConvergencePolicy policy;
    policy.target = target;
    switch (p) {
        case 2: policy.n_max = 12; break;
        case 3: policy.n_max = 8; break;
        case 5: policy.n_max = 6; break;
        case 7: policy.n_max = 5; break;
        default: policy.n_max = 4; break;
    }
    return policy;
}

ConvergencePolicy ConvergencePolicy::nested(long p, long target) {
    ConvergencePolicy policy;
    const long depth = p <= 3 ? 4 : (p <= 7 ? 3 : 2);
    policy.n_min = depth;
    policy.n_max = depth;
    policy.target = std::min(target, 3L);
    return policy;
}

void ConvergencePolicy::validate() const {
    if (n_min < 0 || n_max < n_min) throw InvalidArgument("policy needs 0 <= n_min <= n_max");
    if (n_max > 40) throw InvalidArgument("policy depth above 40 is not supported");
    if (target < 1) throw InvalidArgument("policy target must be at least 1");
    if (guard < 0) throw InvalidArgument("policy guard must be non-negative");
}

namespace {

PadicNumber range_sum(const Integrand& f, const PadicNumber& x, long begin, long end) {
    PadicNumber total = PadicNumber::zero(x.context());
    for (long j = begin; j < end; ++j) total += f(x + j);
    return total;
}

PadicNumber sum_points(const Integrand& f, const PadicNumber& x, long begin, long end, unsigned workers) {
    const long count = end - begin;
    if (workers <= 1 || count < 2 * static_cast<long>(workers)) return range_sum(f, x, begin, end);
    std::vector<std::future<PadicNumber>> parts;
    const long chunk = (count + workers - 1) / workers;
    for (long lo = begin; lo < end; lo += chunk) {
        const long hi = std::min(end, lo + chunk);
        parts.push_back(std::async(std::launch::async, [&f, &x, lo, hi] { return range_sum(f, x, lo, hi); }));
    }
    PadicNumber total = PadicNumber::zero(x.context());
    for (auto& part : parts) total += part.get();
    return total;
}

long power(long p, long n) {
    long r = 1;
    while (n-- > 0) r *= p;
    return r;
}

}  // namespace

IntegralResult integrate_b(const Integrand& f, const PadicNumber& x, long b, const ConvergencePolicy& policy,
                           unsigned workers) {
    policy.validate();
    if (b < 1) throw InvalidArgument("integrate_b needs b >= 1");
    const long p = x.prime();
    const long first = std::max(policy.n_min, 1L);

    PadicNumber total = sum_points(f, x, 0, b, workers);
    std::vector<PadicNumber> sums{total.divided_by_integer(b)};
    std::vector<long> trace;
    long count = b;
    long chosen = -1;
    for (long n = 1; n <= policy.n_max; ++n) {
        const long next = b * power(p, n);
        total += sum_points(f, x, count, next, workers);
        count = next;
        sums.push_back(total.shifted(-n).divided_by_integer(b));
        trace.push_back(residual_valuation(sums[n], sums[n - 1]));
        const long m = n - 1;
        if (m >= first && trace[m - 1] >= policy.target && trace[m] >= policy.target) {
            chosen = m;
            break;
        }
    }

    const long depth = chosen < 0 ? policy.n_max : chosen;
    IntegralResult result{sums[static_cast<std::size_t>(depth)], 0, trace, depth, chosen >= 0};
    // Two consecutive differences certify the value: the pair that fired the
    // rule, or the last two at the depth limit. Fewer than two certify nothing.
    const long last = result.converged ? depth + 1 : depth;
    long achieved = 0;
    if (last >= 2) {
        achieved = std::min({result.value.absolute_precision(), trace[static_cast<std::size_t>(last - 2)],
                             trace[static_cast<std::size_t>(last - 1)]});
    }
    result.achieved = achieved;
    return result;
}

IntegralResult integrate(const Integrand& f, const PadicNumber& x, const ConvergencePolicy& policy, unsigned workers) {
    return integrate_b(f, x, 1, policy, workers);
}

PadicNumber distribution_sum(const Integrand& f, const PadicNumber& x, long n) {
    if (n < 1) throw InvalidArgument("distribution_sum needs n >= 1");
    PadicNumber total = PadicNumber::zero(x.context());
    for (long k = 0; k < n; ++k) total += f((x + k).divided_by_integer(n));
    return total;
}

}  // namespace padic
