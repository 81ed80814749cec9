#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "padic/exact.hpp"

namespace padic {

/// The four regimes the distribution formula distinguishes, with Z_p split
/// into units and pZ_p.
enum class Regime {
    NegativeValuation,   ///< v(x) < 0
    Unit,                ///< x in Z_p^*
    MultipleOfP,         ///< x in pZ_p
    ExtensionOutsideFp,  ///< v(x) >= 0 in Q_{p^2}, residue outside F_p
    ExtensionInsideFp,   ///< x in O_K minus Z_p with residue in F_p
};

const std::vector<Regime>& all_regimes();
std::string_view regime_name(Regime regime);
/// Whether points of the regime need an extension of degree >= 2.
bool regime_needs_extension(Regime regime);

/// Fixed-seed source of sample points. Integers are drawn by reducing the raw
/// 64-bit output, so the sequence does not depend on the standard library's
/// distribution implementations.
class SampleGenerator {
public:
    explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi);
    /// Integer in [lo, hi] not divisible by p (non-zero).
    long coprime(long p, long lo, long hi);

    ExactElement draw(Regime regime, long p);

private:
    std::mt19937_64 rng_;
};

}  // namespace padic
