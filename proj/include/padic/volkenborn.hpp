#pragma once

#include <functional>
#include <vector>

#include "padic/number.hpp"

namespace padic {

/// Depth bounds and precision target for the Volkenborn sums
///   S_n = (b p^n)^-1 * sum_{j < b p^n} f(x + j).
struct ConvergencePolicy {
    long n_min = 3;
    long n_max = 4;
    long target = 5;
    long guard = 4;

    /// n_min = 3 and n_max = 12, 8, 6, 5 for p = 2, 3, 5, 7 (4 beyond).
    static ConvergencePolicy defaults(long p, long target);

    /// Fixed depth for integrals whose integrand is itself an integral:
    /// 4 for p <= 3, 3 for p = 5, 7 and 2 beyond; the target is min(target, 3).
    static ConvergencePolicy nested(long p, long target);

    /// Throws InvalidArgument unless 0 <= n_min <= n_max, target >= 1 and
    /// guard >= 0.
    void validate() const;

    /// Digits the integrand should carry: target + n_max + guard.
    long working_precision() const { return target + n_max + guard; }
};

using Integrand = std::function<PadicNumber(const PadicNumber&)>;

struct IntegralResult {
    PadicNumber value;
    /// Certified lower bound on the absolute precision of value.
    long achieved = 0;
    /// trace[i] = v(S_{i+1} - S_i) for every computed depth.
    std::vector<long> trace;
    long depth = 0;
    /// Whether the double-stability rule fired before n_max.
    bool converged = false;
};

/// lim (1/p^n) sum_{j < p^n} f(x + j).
///
/// The depth n* is the least n >= n_min with v(S_n - S_{n-1}) >= target and
/// v(S_{n+1} - S_n) >= target (n + 1 <= n_max); otherwise n* = n_max. The
/// value is S_{n*} and the achieved precision is the smaller of its tracked
/// absolute precision and the stability differences at n* and n* + 1, or at
/// n_max - 1 and n_max when the rule never fired (0 when n_max < 2).
/// The sums are split across `workers` threads when workers > 1; the partial
/// sums are combined in index order, which gives identical results.
IntegralResult integrate(const Integrand& f, const PadicNumber& x, const ConvergencePolicy& policy,
                         unsigned workers = 1);

/// Same limit over b p^n points; independent of b >= 1.
IntegralResult integrate_b(const Integrand& f, const PadicNumber& x, long b, const ConvergencePolicy& policy,
                           unsigned workers = 1);

/// sum_{k < n} f((x + k) / n).
PadicNumber distribution_sum(const Integrand& f, const PadicNumber& x, long n);

}  // namespace padic
