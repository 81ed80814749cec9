#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padic/number.hpp"
#include "padic/volkenborn.hpp"

namespace padic {

/// n = m p^r with p not dividing m.
std::pair<long, long> factor_n(long p, long n);

enum class StopReason { RExhausted, LeftIntegralRing, ResidueLeftFp };

std::string_view stop_reason_name(StopReason reason);

/// x_0 = x and x_{j+1} = (x_j + p - ell(x_j)) / p while j < r and x_j is
/// integral with residue in F_p.
struct ShiftSequence {
    std::vector<PadicNumber> x;
    /// ell(x_j) for each step taken, so ell.size() == omega.
    std::vector<long> ell;
    long m = 1;
    long r = 0;
    long omega = 0;
    StopReason stop = StopReason::RExhausted;
};

/// The W_p conditions are tested before the step budget, so a point of W_p
/// reached at j = r reports why it left rather than r-exhausted. Throws
/// IndeterminateError naming the step when a regime cannot be decided.
ShiftSequence build_sequence(const PadicNumber& x, long n);

/// Convergence record of one integral that fed a value.
struct TraceEntry {
    std::string label;
    std::vector<long> diffs;
    long depth = 0;
    long achieved = 0;
    bool converged = false;
};

/// A computed quantity with its certified absolute precision and the
/// integrals behind it.
struct Evaluation {
    PadicNumber value;
    long achieved;
    std::vector<TraceEntry> trace;

    static Evaluation known(const PadicNumber& v);
    static Evaluation integral(std::string label, const IntegralResult& r);

    Evaluation& operator+=(const Evaluation& o);
    Evaluation& operator-=(const Evaluation& o);
    /// Multiplies by a value of known precision; precision moves by v(c).
    Evaluation times(const PadicNumber& c) const;
};

Evaluation operator+(Evaluation a, const Evaluation& b);
Evaluation operator-(Evaluation a, const Evaluation& b);

/// sum_{k < n} LGamma_p((x + k) / n).
Evaluation dist_lhs(const PadicNumber& x, long n, const ConvergencePolicy& policy, unsigned workers = 1);

/// sum_j LGamma_p(x_j) - log_p(n) sum_j R_P(x_j) over the shift sequence.
/// Asserts log_p(n) == log_p(m).
Evaluation dist_rhs(const PadicNumber& x, long n, const ConvergencePolicy& policy, unsigned workers = 1);

/// log_p(n) for a natural n, checked against log_p(m).
PadicNumber log_of_natural(const Context& ctx, long n);

}  // namespace padic
