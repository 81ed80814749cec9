#pragma once

#include "padic/number.hpp"

namespace padic {

/// Iwasawa logarithm, normalised by log_p(p) = 0.
///
/// x = p^v * omega * u1 with omega the Teichmuller representative of the
/// unit part and u1 = 1 (mod p); then log_p(x) = log(u1) by the usual series.
/// For p = 2 the series runs on u1^2 (= 1 mod 8) and the result is halved.
/// The result is known to the precision the input supports; the series is
/// cut where the tail provably falls below that precision.
PadicNumber log_p(const PadicNumber& x);

/// Number of series terms used for an argument z with valuation vz >= 1 to
/// reach absolute precision target: the least K with
/// (k * vz - floor(log_p k)) >= target for every k > K.
long log_series_terms(long p, long vz, long target);

}  // namespace padic
