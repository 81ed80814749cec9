#include "padic/distribution.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic/core.hpp"
#include "padic/errors.hpp"
#include "padic/log.hpp"
#include "padic/loggamma.hpp"

namespace padic {

std::pair<long, long> factor_n(long p, long n) {
    if (n < 1) throw InvalidArgument("n must be a positive integer");
    long r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    return {n, r};
}

std::string_view stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::RExhausted: return "r-exhausted";
        case StopReason::LeftIntegralRing: return "left-integral-ring";
        case StopReason::ResidueLeftFp: return "residue-left-Fp";
    }
    return "?";
}

ShiftSequence build_sequence(const PadicNumber& x, long n) {
    ShiftSequence seq;
    std::tie(seq.m, seq.r) = factor_n(x.prime(), n);
    PadicNumber current = x;
    for (long j = 0;; ++j) {
        seq.x.push_back(current);
        bool outside = false;
        try {
            outside = in_Wp(current);
        } catch (const IndeterminateError& e) {
            throw IndeterminateError("shift sequence step " + std::to_string(j) + ": " + e.what());
        }
        if (outside) {
            seq.stop = !current.is_zero() && current.valuation() < 0 ? StopReason::LeftIntegralRing
                                                                      : StopReason::ResidueLeftFp;
            break;
        }
        if (j == seq.r) {
            seq.stop = StopReason::RExhausted;
            break;
        }
        seq.ell.push_back(ell(current));
        current = dwork_shift(current);
    }
    seq.omega = static_cast<long>(seq.x.size()) - 1;
    return seq;
}

Evaluation Evaluation::known(const PadicNumber& v) {
    return {v, v.absolute_precision(), {}};
}

Evaluation Evaluation::integral(std::string label, const IntegralResult& r) {
    return {r.value, r.achieved, {{std::move(label), r.trace, r.depth, r.achieved, r.converged}}};
}

Evaluation& Evaluation::operator+=(const Evaluation& o) {
    value += o.value;
    achieved = std::min(achieved, o.achieved);
    trace.insert(trace.end(), o.trace.begin(), o.trace.end());
    return *this;
}

Evaluation& Evaluation::operator-=(const Evaluation& o) {
    value -= o.value;
    achieved = std::min(achieved, o.achieved);
    trace.insert(trace.end(), o.trace.begin(), o.trace.end());
    return *this;
}

Evaluation Evaluation::times(const PadicNumber& c) const {
    Evaluation out{value * c, 0, trace};
    const long shifted = c.is_exact_zero() ? kExactPrecision : std::min(kExactPrecision, achieved + c.valuation());
    out.achieved = std::min(shifted, out.value.absolute_precision());
    return out;
}

Evaluation operator+(Evaluation a, const Evaluation& b) { return a += b; }
Evaluation operator-(Evaluation a, const Evaluation& b) { return a -= b; }

PadicNumber log_of_natural(const Context& ctx, long n) {
    const auto [m, r] = factor_n(ctx->prime(), n);
    const PadicNumber log_n = log_p(PadicNumber::from_integer(ctx, n));
    if (!(log_n == log_p(PadicNumber::from_integer(ctx, m)))) {
        throw std::logic_error("log_p(n) and log_p(m) differ");
    }
    return log_n;
}

Evaluation dist_lhs(const PadicNumber& x, long n, const ConvergencePolicy& policy, unsigned workers) {
    Evaluation total = Evaluation::known(PadicNumber::zero(x.context()));
    for (long k = 0; k < n; ++k) {
        const PadicNumber point = (x + k).divided_by_integer(n);
        total += Evaluation::integral("LGamma_p((x+" + std::to_string(k) + ")/" + std::to_string(n) + ")",
                                      lp(point, policy, workers));
    }
    return total;
}

Evaluation dist_rhs(const PadicNumber& x, long n, const ConvergencePolicy& policy, unsigned workers) {
    const ShiftSequence seq = build_sequence(x, n);
    const Context& ctx = x.context();
    Evaluation gammas = Evaluation::known(PadicNumber::zero(ctx));
    Evaluation corrections = Evaluation::known(PadicNumber::zero(ctx));
    for (std::size_t j = 0; j < seq.x.size(); ++j) {
        gammas += Evaluation::integral("LGamma_p(x_" + std::to_string(j) + ")", lp(seq.x[j], policy, workers));
        corrections += Evaluation::known(rp_closed(seq.x[j]));
    }
    return gammas - corrections.times(log_of_natural(ctx, n));
}

}  // namespace padic
