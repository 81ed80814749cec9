#include <gtest/gtest.h>

#include <random>
#include <fstream>
#include <sstream>

#include "padic/cli/app.hpp"
#include "padic/cli/parse.hpp"
#include "padic/cli/render.hpp"
#include "padic/cli/suite.hpp"

using namespace padic;
using namespace padic::cli;

namespace {

struct Output {
    int code;
    std::string out;
    std::string err;
};

Output run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Parse) {
    const Context c = PadicContext::create(5, 2, 10);
    EXPECT_EQ(parse_element("1/5 + 2*g", *c), ExactElement(std::vector<mpq_class>{mpq_class(1, 5), mpq_class(2)}));
    EXPECT_EQ(parse_element(" p^2 * 3 ", *c), ExactElement::integer(75));
    EXPECT_EQ(parse_element("p^-2*(3+g)", *c),
              ExactElement(std::vector<mpq_class>{mpq_class(3, 25), mpq_class(1, 25)}));
    EXPECT_EQ(parse_element("g^2", *c), ExactElement::integer(2));
    EXPECT_EQ(parse_element("-(g - 1)/2", *c), ExactElement(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-1, 2)}));
    EXPECT_THROW(parse_element("1/0", *c), ParseError);
    EXPECT_THROW(parse_element("1 +", *c), ParseError);
    EXPECT_THROW(parse_element("h", *c), ParseError);
    EXPECT_THROW(parse_element("1/g", *c), ParseError);
}

TEST(Cli, RoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
        const int f = 1 + static_cast<int>(rng() % 2);
        const Context c = PadicContext::create(p, f, 8 + static_cast<long>(rng() % 10));
        std::vector<mpq_class> coeffs;
        for (int k = 0; k < f; ++k) {
            coeffs.emplace_back(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 50));
            coeffs.back().canonicalize();
        }
        const PadicNumber x = PadicNumber::from_poly(c, coeffs);
        const PadicNumber back = parse_element(x.to_string(), *c).to_padic(c);
        ASSERT_TRUE(back == x) << x.to_string() << " -> " << back.to_string();
    }
}

TEST(Cli, EvalExamples) {
    const Output lp = run_cli({"eval", "--p", "3", "--prec", "6", "--fn", "lp", "--x", "3"});
    EXPECT_EQ(lp.code, kExitPass);
    const Output log = run_cli({"eval", "--p", "3", "--prec", "6", "--fn", "logp", "--x", "2"});
    // Same digits as log_3(2).
    const auto digits = [](const std::string& s) { return s.substr(s.find("digits"), s.find('\n', s.find("digits")) - s.find("digits")); };
    EXPECT_EQ(digits(lp.out), digits(log.out));

    const Output rp = run_cli({"eval", "--p", "5", "--f", "2", "--fn", "rp", "--x", "g"});
    EXPECT_EQ(rp.code, kExitPass);
    EXPECT_NE(rp.out.find("rational = g - 1/2"), std::string::npos) << rp.out;

    const Output gamma = run_cli({"eval", "--p", "5", "--fn", "gamma_nat", "--n", "5"});
    EXPECT_EQ(gamma.code, kExitPass);
    EXPECT_NE(gamma.out.find("-24"), std::string::npos);
}

TEST(Cli, CheckExamples) {
    const Output refl = run_cli({"check", "--identity", "reflection", "--p", "2", "--x", "1/3", "--N", "5"});
    EXPECT_EQ(refl.code, kExitPass);
    EXPECT_EQ(refl.out.rfind("[PASS] reflection", 0), 0u) << refl.out;

    const Output dist =
        run_cli({"check", "--identity", "distribution", "--p", "2", "--x", "1", "--n", "4", "--N", "5", "--format", "json"});
    EXPECT_EQ(dist.code, kExitPass);
    const Json j = Json::parse(dist.out);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"identity", "inputs", "lhs", "rhs", "residual_valuation", "target", "pass",
                                              "trace"}));
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_GE(j["residual_valuation"].get<long>(), 5);
}

TEST(Cli, SequenceExamples) {
    EXPECT_EQ(run_cli({"sequence", "--p", "2", "--x", "1", "--n", "4"}).out, "[1, 1, 1] ω=2 (r-exhausted)\n");
    EXPECT_EQ(run_cli({"sequence", "--p", "3", "--x", "1/3", "--n", "3"}).out, "[1/3] ω=0 (left-integral-ring)\n");
    EXPECT_EQ(run_cli({"sequence", "--p", "3", "--f", "2", "--x", "g", "--n", "9"}).out, "[g] ω=0 (residue-left-Fp)\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"eval", "--fn", "lp", "--x", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"eval", "--p", "4", "--fn", "lp", "--x", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"eval", "--p", "3", "--fn", "lp", "--x", "1/"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"eval", "--p", "3", "--fn", "nope", "--x", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"check", "--identity", "bogus", "--p", "3", "--x", "1"}).code, kExitUsage);

    const Output domain = run_cli({"eval", "--p", "3", "--fn", "ld", "--x", "2"});
    EXPECT_EQ(domain.code, kExitDomain);
    EXPECT_FALSE(domain.err.empty());
    EXPECT_EQ(run_cli({"check", "--identity", "morita_dist", "--p", "3", "--f", "2", "--x", "g", "--n", "2"}).code,
              kExitDomain);
}

TEST(Cli, UncertifiedSidesAreReported) {
    // Depth 1 sees a single partial sum of R_P; nothing is certified and the
    // report says so instead of claiming digits.
    const Output o = run_cli({"check", "--identity", "rp_agreement", "--p", "3", "--x", "2", "--depth-max", "1"});
    EXPECT_EQ(o.code, kExitPass);
    EXPECT_NE(o.out.find("required 0"), std::string::npos) << o.out;
}

TEST(Cli, FailedReportText) {
    const Context c = PadicContext::create(3, 1, 10);
    CheckReport r{.lhs = PadicNumber::one(c), .rhs = PadicNumber::zero(c)};
    r.identity = Identity::Reflection;
    r.p = 3;
    r.x = "2";
    r.lhs_achieved = 10;
    r.rhs_achieved = kExactPrecision;
    r.target = 5;
    r.residual = 0;
    const std::string text = report_text(r);
    EXPECT_EQ(text.rfind("[FAIL] reflection  p=3 x=2  residual 0 < required 5 (target 5, achieved 10/exact)", 0), 0u)
        << text;
    EXPECT_TRUE(report_json(r)["trace"]["rhs_achieved"].is_null());
}

TEST(Cli, JsonIsByteIdentical) {
    const std::vector<std::string> args{"check", "--identity", "distribution", "--p", "3", "--f", "2", "--x", "g",
                                        "--n",   "9",          "--N",          "4", "--format", "json"};
    const Output a = run_cli(args);
    const Output b = run_cli(args);
    EXPECT_EQ(a.code, kExitPass);
    EXPECT_EQ(a.out, b.out);

    std::vector<std::string> w = args;
    w.insert(w.end(), {"--workers", "4"});
    EXPECT_EQ(run_cli(w).out, a.out);
}

TEST(Cli, SuitePlanAndRequests) {
    const SuitePlan plan = SuitePlan::from_json(R"({"seed": 5, "identities": ["reflection", "distribution"]})");
    EXPECT_EQ(plan.seed, 5u);
    EXPECT_EQ(plan.identities.size(), 2u);
    SuiteConfig config;
    config.p = 3;
    const auto requests = suite_requests(plan, config);
    EXPECT_FALSE(requests.empty());
    const auto again = suite_requests(plan, config);
    ASSERT_EQ(again.size(), requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) {
        EXPECT_EQ(requests[i].x, again[i].x);
        EXPECT_EQ(requests[i].n, again[i].n);
    }
    EXPECT_THROW(SuitePlan::from_json(R"({"identities": ["nope"]})"), std::exception);
}

TEST(Cli, ShippedPlanIsTheDefault) {
    std::ifstream file(SAMPLING_PLAN_PATH);
    ASSERT_TRUE(file.good());
    std::stringstream text;
    text << file.rdbuf();
    const SuitePlan shipped = SuitePlan::from_json(text.str());
    const SuitePlan defaults;
    EXPECT_EQ(shipped.seed, defaults.seed);
    EXPECT_EQ(shipped.points_per_regime, defaults.points_per_regime);
    EXPECT_EQ(shipped.n_values, defaults.n_values);
    EXPECT_EQ(shipped.identities, defaults.identities);
}

TEST(Cli, SuiteDefaultsToJson) {
    const Output o = run_cli({"suite", "--p", "2", "--N", "4", "--seed", "9"});
    EXPECT_EQ(o.code, kExitPass) << o.err;
    EXPECT_TRUE(Json::parse(o.out).is_array());
}

TEST(Cli, SuiteRuns) {
    const SuitePlan plan = SuitePlan::from_json(R"({"identities": ["reflection", "rp_agreement"]})");
    const std::string path = testing::TempDir() + "plan.json";
    {
        std::ofstream file(path);
        file << R"({"identities": ["reflection", "rp_agreement"]})";
    }
    const Output o = run_cli({"suite", "--p", "3", "--N", "4", "--plan", path, "--format", "json"});
    EXPECT_EQ(o.code, kExitPass) << o.out << o.err;
    const Json j = Json::parse(o.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), suite_requests(plan, SuiteConfig{}).size());
    for (const auto& r : j) EXPECT_TRUE(r["pass"].get<bool>());
}
