#include "padic/sampling.hpp"

#include "padic/errors.hpp"

namespace padic {

const std::vector<Regime>& all_regimes() {
    static const std::vector<Regime> regimes{Regime::NegativeValuation, Regime::Unit, Regime::MultipleOfP,
                                             Regime::ExtensionOutsideFp, Regime::ExtensionInsideFp};
    return regimes;
}

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::NegativeValuation: return "negative-valuation";
        case Regime::Unit: return "unit";
        case Regime::MultipleOfP: return "multiple-of-p";
        case Regime::ExtensionOutsideFp: return "extension-outside-Fp";
        case Regime::ExtensionInsideFp: return "extension-inside-Fp";
    }
    return "?";
}

bool regime_needs_extension(Regime regime) {
    return regime == Regime::ExtensionOutsideFp || regime == Regime::ExtensionInsideFp;
}

long SampleGenerator::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

long SampleGenerator::coprime(long p, long lo, long hi) {
    for (;;) {
        const long a = integer(lo, hi);
        if (a % p != 0) return a;
    }
}

ExactElement SampleGenerator::draw(Regime regime, long p) {
    const auto fraction = [&](long num) { return mpq_class(num, coprime(p, 1, 9)); };
    const auto p_power = [&](long k) {
        long r = 1;
        while (k-- > 0) r *= p;
        return r;
    };
    switch (regime) {
        case Regime::NegativeValuation: {
            const long k = integer(1, 2);
            mpq_class q = fraction(coprime(p, -40, 40)) / p_power(k);
            q.canonicalize();
            return ExactElement::rational(q);
        }
        case Regime::Unit: {
            mpq_class q = fraction(coprime(p, -40, 40));
            q.canonicalize();
            return ExactElement::rational(q);
        }
        case Regime::MultipleOfP: {
            const long k = integer(1, 2);
            mpq_class q = fraction(coprime(p, -40, 40)) * p_power(k);
            q.canonicalize();
            return ExactElement::rational(q);
        }
        case Regime::ExtensionOutsideFp: {
            mpq_class a = fraction(integer(-20, 20));
            mpq_class c = fraction(coprime(p, -9, 9));
            a.canonicalize();
            c.canonicalize();
            return ExactElement({a, c});
        }
        case Regime::ExtensionInsideFp: {
            mpq_class a = fraction(integer(-20, 20));
            mpq_class c = fraction(coprime(p, -9, 9));
            c *= p_power(integer(1, 2));
            a.canonicalize();
            c.canonicalize();
            return ExactElement({a, c});
        }
    }
    throw InvalidArgument("unknown regime");
}

}  // namespace padic
