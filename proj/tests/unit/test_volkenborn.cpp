#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padic/errors.hpp"
#include "padic/loggamma.hpp"
#include "padic/volkenborn.hpp"

using namespace padic;

namespace {

PadicNumber rat(const Context& c, long a, long b = 1) { return PadicNumber::from_rational(c, a, b); }

const Integrand identity = [](const PadicNumber& t) { return t; };
const Integrand square = [](const PadicNumber& t) { return t * t; };
const Integrand cube = [](const PadicNumber& t) { return t * t * t; };

ConvergencePolicy fixed_depth(long n) {
    ConvergencePolicy policy;
    policy.n_min = n;
    policy.n_max = n;
    return policy;
}

}  // namespace

TEST(Volkenborn, PolicyPresets) {
    EXPECT_EQ(ConvergencePolicy::defaults(2, 5).n_max, 12);
    EXPECT_EQ(ConvergencePolicy::defaults(3, 5).n_max, 8);
    EXPECT_EQ(ConvergencePolicy::defaults(5, 5).n_max, 6);
    EXPECT_EQ(ConvergencePolicy::defaults(7, 5).n_max, 5);
    EXPECT_EQ(ConvergencePolicy::defaults(11, 5).n_max, 4);
    const ConvergencePolicy nested = ConvergencePolicy::nested(3, 8);
    EXPECT_EQ(nested.n_min, 4);
    EXPECT_EQ(nested.n_max, 4);
    EXPECT_EQ(nested.target, 3);
    EXPECT_EQ(ConvergencePolicy::defaults(5, 5).working_precision(), 15);
    ConvergencePolicy bad;
    bad.n_min = 5;
    bad.n_max = 4;
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(Volkenborn, PartialSumsMatchClosedForms) {
    for (long p : {2L, 3L, 5L}) {
        const Context c = PadicContext::create(p, 1, 30);
        for (long n = 0; n <= 5; ++n) {
            const PadicNumber s1 = integrate(identity, PadicNumber::zero(c), fixed_depth(n)).value;
            const PadicNumber s2 = integrate(square, PadicNumber::zero(c), fixed_depth(n)).value;
            EXPECT_TRUE(agrees(s1, PadicNumber::from_rational(c, oracle::volkenborn_sum_t(p, n))));
            EXPECT_TRUE(agrees(s2, PadicNumber::from_rational(c, oracle::volkenborn_sum_t2(p, n))));
            EXPECT_GE(s1.absolute_precision(), 30 - n - 1);
        }
    }
}

TEST(Volkenborn, BernoulliValues) {
    for (long p : {2L, 3L, 5L, 7L}) {
        const ConvergencePolicy policy = ConvergencePolicy::defaults(p, 5);
        const Context c = PadicContext::create(p, 1, policy.working_precision());
        const IntegralResult r1 = integrate(identity, PadicNumber::zero(c), policy);
        const IntegralResult r2 = integrate(square, PadicNumber::zero(c), policy);
        // v(S_n - S_{n-1}) grows like n, so p = 7 hits n_max = 5 first and
        // certifies only the last two differences.
        const long expected = std::min(5L, policy.n_max - 2);
        EXPECT_GE(r1.achieved, expected);
        EXPECT_GE(r2.achieved, expected);
        EXPECT_GE(residual_valuation(r1.value, rat(c, -1, 2)), r1.achieved);
        EXPECT_GE(residual_valuation(r2.value, rat(c, 1, 6)), r2.achieved);
        EXPECT_EQ(static_cast<long>(r1.trace.size()), r1.depth + (r1.converged ? 1 : 0));
    }
}

TEST(Volkenborn, StabilityRule) {
    const Context c = PadicContext::create(5, 1, 20);
    ConvergencePolicy policy = ConvergencePolicy::defaults(5, 4);
    const IntegralResult r = integrate(identity, PadicNumber::zero(c), policy);
    ASSERT_TRUE(r.converged);
    // v(S_n - S_{n-1}) = n - 1 for f(t) = t, so the first n >= 3 with two
    // consecutive differences >= 4 is n = 5.
    EXPECT_EQ(r.depth, 5);
    EXPECT_EQ(r.trace, (std::vector<long>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(r.achieved, 4);

    policy.target = 30;
    const IntegralResult capped = integrate(identity, PadicNumber::zero(c), policy);
    EXPECT_FALSE(capped.converged);
    EXPECT_EQ(capped.depth, policy.n_max);
    EXPECT_EQ(capped.achieved, 4);

    // A single difference certifies nothing, however stable it looks.
    ConvergencePolicy shallow;
    shallow.n_min = 1;
    shallow.n_max = 1;
    EXPECT_EQ(integrate(identity, PadicNumber::zero(c), shallow).achieved, 0);
}

TEST(Volkenborn, IndependentOfB) {
    for (long p : {2L, 3L, 5L}) {
        const ConvergencePolicy policy = ConvergencePolicy::defaults(p, 5);
        const Context c = PadicContext::create(p, 2, policy.working_precision());
        const PadicNumber x = PadicNumber::generator(c) + rat(c, 1, 3);
        const IntegralResult base = integrate(cube, x, policy);
        for (long b : {2L, 3L, 4L}) {
            const IntegralResult other = integrate_b(cube, x, b, policy);
            EXPECT_GE(residual_valuation(base.value, other.value), std::min(base.achieved, other.achieved))
                << "p=" << p << " b=" << b;
        }
    }
}

TEST(Volkenborn, SplittingFormula) {
    const Integrand phi = [](const PadicNumber& t) { return phi_p(t); };
    for (long p : {2L, 3L}) {
        const ConvergencePolicy policy = ConvergencePolicy::defaults(p, 5);
        const Context c = PadicContext::create(p, 1, policy.working_precision() + 4);
        const PadicNumber origin = PadicNumber::zero(c);
        for (const Integrand* f : {&identity, &square, &cube, &phi}) {
            const IntegralResult whole = integrate(*f, origin, policy);
            for (long M : {2L, 3L}) {
                PadicNumber total = PadicNumber::zero(c);
                long achieved = whole.achieved;
                for (long k = 0; k < M; ++k) {
                    // Evaluated at t = j this is f(k + M j).
                    const Integrand g = [&](const PadicNumber& t) { return (*f)(t * M + k); };
                    const IntegralResult part = integrate(g, origin, policy);
                    total += part.value;
                    achieved = std::min(achieved, part.achieved);
                }
                total = total.divided_by_integer(M);
                // Dividing by M = p gives up one digit of what was certified.
                const long loss = M % p == 0 ? 1 : 0;
                EXPECT_GE(residual_valuation(total, whole.value), achieved - loss) << "p=" << p << " M=" << M;
            }
        }
    }
}

TEST(Volkenborn, DifferenceProperty) {
    for (long p : {2L, 3L, 5L}) {
        const ConvergencePolicy policy = ConvergencePolicy::defaults(p, 5);
        const Context c = PadicContext::create(p, 1, policy.working_precision());
        for (const PadicNumber& x : {rat(c, 5, 3), rat(c, 1, 2 * p + 1), rat(c, -4)}) {
            const IntegralResult a = integrate(square, x + 1, policy);
            const IntegralResult b = integrate(square, x, policy);
            EXPECT_GE(residual_valuation(a.value - b.value, x * 2), std::min(a.achieved, b.achieved));
        }
    }
}

TEST(Volkenborn, WorkersGiveIdenticalResults) {
    const Context c = PadicContext::create(3, 2, 20);
    const PadicNumber x = PadicNumber::generator(c) - rat(c, 1, 2);
    const Integrand f = [](const PadicNumber& t) { return t.pow(5) + t * 7; };
    const ConvergencePolicy policy = ConvergencePolicy::defaults(3, 6);
    const IntegralResult one = integrate(f, x, policy, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const IntegralResult many = integrate(f, x, policy, w);
        EXPECT_TRUE(one.value == many.value);
        EXPECT_EQ(one.value.to_string_with_precision(), many.value.to_string_with_precision());
        EXPECT_EQ(one.trace, many.trace);
        EXPECT_EQ(one.achieved, many.achieved);
    }
}

TEST(Volkenborn, DistributionSum) {
    const Context c = PadicContext::create(5, 1, 20);
    const PadicNumber x = rat(c, 3, 7);
    for (long n : {1L, 2L, 5L, 6L}) {
        const PadicNumber s = distribution_sum(identity, x, n);
        EXPECT_TRUE(agrees(s, x + rat(c, n - 1, 2)));
    }
    EXPECT_THROW(distribution_sum(identity, x, 0), InvalidArgument);
}
