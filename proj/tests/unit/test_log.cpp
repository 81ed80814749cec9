#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "padic/core.hpp"
#include "padic/log.hpp"

using namespace padic;

namespace {

PadicNumber rat(const Context& c, long a, long b = 1) { return PadicNumber::from_rational(c, a, b); }

long floor_log(long p, long k) {
    long r = 0;
    while (k >= p) {
        k /= p;
        ++r;
    }
    return r;
}

}  // namespace

TEST(Log, NormalisationAndTorsion) {
    for (long p : {2L, 3L, 5L, 7L}) {
        const Context c = PadicContext::create(p, 1, 20);
        EXPECT_TRUE(log_p(rat(c, p)).is_zero());
        EXPECT_TRUE(log_p(rat(c, -1)).is_zero());
        EXPECT_TRUE(log_p(PadicNumber::one(c)).is_zero());
        for (long a = 1; a < p; ++a) EXPECT_TRUE(log_p(teichmuller(rat(c, a))).is_zero());
    }
    const Context c2 = PadicContext::create(5, 2, 12);
    EXPECT_TRUE(log_p(teichmuller(PadicNumber::generator(c2))).is_zero());
}

TEST(Log, MatchesRationalSeries) {
    struct Case {
        long p, a;
    };
    for (const Case& k : {Case{3, 4}, Case{2, 5}, Case{5, 6}, Case{7, 15}, Case{3, -2}, Case{2, -3}}) {
        const Context c = PadicContext::create(k.p, 1, 16);
        const mpq_class z = mpq_class(k.a) - 1;
        const PadicNumber expected = PadicNumber::from_rational(c, oracle::log_series(z, 80));
        const PadicNumber got = log_p(rat(c, k.a));
        EXPECT_GE(residual_valuation(got, expected), got.absolute_precision()) << "p=" << k.p << " a=" << k.a;
        EXPECT_GE(got.absolute_precision(), 15);
    }
}

TEST(Log, IsAHomomorphism) {
    std::mt19937_64 rng(11);
    for (long p : {2L, 3L, 5L}) {
        for (int f : {1, 2}) {
            const Context c = PadicContext::create(p, f, 16);
            for (int i = 0; i < 40; ++i) {
                std::vector<mpq_class> a{mpq_class(static_cast<long>(rng() % 60) + 1), mpq_class(static_cast<long>(rng() % 7))};
                std::vector<mpq_class> b{mpq_class(static_cast<long>(rng() % 60) - 30), mpq_class(1)};
                a.resize(static_cast<std::size_t>(f));
                b.resize(static_cast<std::size_t>(f));
                const PadicNumber x = PadicNumber::from_poly(c, a);
                const PadicNumber y = PadicNumber::from_poly(c, b);
                if (x.is_zero() || y.is_zero()) continue;
                EXPECT_TRUE(agrees(log_p(x * y), log_p(x) + log_p(y)));
                EXPECT_TRUE(agrees(log_p(x / y), log_p(x) - log_p(y)));
                EXPECT_TRUE(agrees(log_p(x.shifted(3)), log_p(x)));
                EXPECT_TRUE(agrees(log_p(x.pow(3)), log_p(x) * 3));
            }
        }
    }
}

TEST(Log, PrecisionFollowsInput) {
    const Context c = PadicContext::create(3, 1, 20);
    const PadicNumber x = rat(c, 4).with_absolute_precision(8);
    const PadicNumber l = log_p(x);
    EXPECT_LE(l.absolute_precision(), 8);
    EXPECT_GE(l.absolute_precision(), 7);
    EXPECT_TRUE(agrees(l, log_p(rat(c, 4))));
}

TEST(Log, SeriesTermBound) {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        for (long vz = 1; vz <= 3; ++vz) {
            for (long target = 1; target <= 40; ++target) {
                const long K = log_series_terms(p, vz, target);
                for (long k = K + 1; k <= K + 2000; ++k) {
                    ASSERT_GE(k * vz - floor_log(p, k), target) << p << " " << vz << " " << target << " " << k;
                }
                if (K > 0) EXPECT_LT(K * vz - floor_log(p, K), target + vz + 1);
            }
        }
    }
}
