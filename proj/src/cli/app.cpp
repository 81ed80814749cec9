#include "padic/cli/app.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "padic/checks.hpp"
#include "padic/cli/parse.hpp"
#include "padic/cli/render.hpp"
#include "padic/cli/suite.hpp"
#include "padic/core.hpp"
#include "padic/errors.hpp"
#include "padic/log.hpp"
#include "padic/loggamma.hpp"

namespace padic::cli {

namespace {

constexpr const char* kGrammar = R"grammar(Inputs are elements of Q(g), written with + - * / ^ and parentheses:
  integers, fractions a/b, 'p' (the prime), 'g' (the generator, needs --f >= 2).
  Examples: 7, -1/2, 9/2, 1/5 + 2*g, p^-2 * (3 + g), "5^-1 * (3 + 2*g)".
  Division and negative exponents need a rational operand; powers of g are
  reduced by the modulus.
Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 domain rejection,
4 internal error.)grammar";

struct Config {
    long p = 0;
    int f = 1;
    long prec = 20;
    long target = 5;
    std::optional<long> depth_max;
    std::optional<long> depth_min;
    long guard = 4;
    std::string format = "text";
    std::uint64_t seed = SuitePlan{}.seed;
    bool seed_given = false;
    unsigned workers = 1;
    std::string modulus;

    std::string fn;
    std::string x;
    std::optional<long> n;
    std::string identity;
    long K = 0;
    std::string plan_path;
    std::optional<long> points;
};

std::optional<std::vector<long>> parse_modulus(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<long> coeffs;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            coeffs.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw ParseError("modulus coefficients must be integers: " + text);
        }
    }
    return coeffs;
}

Context make_field(const Config& c, long precision) {
    return PadicContext::create(c.p, c.f, precision, parse_modulus(c.modulus));
}

ConvergencePolicy make_policy(const Config& c) {
    ConvergencePolicy policy = ConvergencePolicy::defaults(c.p, c.target);
    if (c.depth_max) policy.n_max = *c.depth_max;
    if (c.depth_min) policy.n_min = *c.depth_min;
    policy.n_min = std::min(policy.n_min, policy.n_max);
    policy.guard = c.guard;
    policy.validate();
    return policy;
}

Json field_json(const PadicContext& ctx) {
    return {{"p", ctx.prime()}, {"f", ctx.degree()}, {"modulus", ctx.modulus_string()}};
}

long require_n(const Config& c) {
    if (!c.n) throw ParseError("--n is required");
    return *c.n;
}

int cmd_eval(const Config& c, std::ostream& out) {
    static const std::vector<std::string> fns{"lp", "lp_prime", "ld", "lm", "lm_series", "rp",
                                              "rp_int", "phi", "logp", "gamma_nat", "teich"};
    if (std::find(fns.begin(), fns.end(), c.fn) == fns.end()) throw ParseError("unknown --fn " + c.fn);

    if (c.fn == "gamma_nat") {
        const long n = c.n ? *c.n : (c.x.empty() ? throw ParseError("gamma_nat needs --n") : std::stol(c.x));
        const mpz_class value = morita_gamma_nat(c.p, n);
        if (c.format == "json") {
            out << Json{{"fn", c.fn}, {"inputs", {{"p", c.p}, {"n", n}}}, {"value", value.get_str()}}.dump(2)
                << "\n";
        } else {
            out << "Gamma_M(" << n << ") = " << value.get_str() << "\n";
        }
        return kExitPass;
    }
    if (c.x.empty()) throw ParseError("--x is required for --fn " + c.fn);

    const ConvergencePolicy policy = make_policy(c);
    const Context probe_field = make_field(c, 1);
    const ExactElement exact = parse_element(c.x, *probe_field);
    const PadicNumber probe = exact.to_padic(probe_field);
    const long negative = probe.is_zero() ? 0 : std::max(0L, -probe.valuation());
    // Closed forms are exact at the requested precision; integrals need the
    // policy's working digits.
    const bool closed_form = c.fn == "rp" || c.fn == "phi" || c.fn == "logp" || c.fn == "teich";
    const Context ctx =
        make_field(c, closed_form ? c.prec : std::max(c.prec, policy.working_precision() + negative + 2));
    const PadicNumber x = exact.to_padic(ctx);

    std::optional<IntegralResult> integral;
    std::optional<PadicNumber> closed;
    Json extra = Json::object();
    if (c.fn == "lp") integral = lp(x, policy, c.workers);
    if (c.fn == "lp_prime") integral = lp_prime(x, policy, c.workers);
    if (c.fn == "ld") integral = ld(x, policy, c.workers);
    if (c.fn == "lm") integral = lm(x, policy, c.workers);
    if (c.fn == "rp_int") integral = rp_integral(x, policy, c.workers);
    if (c.fn == "rp") closed = rp_closed(x);
    if (c.fn == "phi") closed = phi_p(x);
    if (c.fn == "logp") closed = log_p(x);
    if (c.fn == "teich") closed = teichmuller(x);
    long achieved = 0;
    if (c.fn == "lm_series") {
        const LambdaTable table = lambda_table(ctx, c.K, policy, c.workers);
        const SeriesValue s = lm_series(x, table);
        closed = s.value;
        achieved = s.achieved;
        extra["terms"] = s.terms;
        extra["tail_bound"] = s.tail_bound;
    }
    if (integral) {
        closed = integral->value;
        achieved = integral->achieved;
        extra = integral_json(*integral);
        extra.erase("label");
    } else if (c.fn != "lm_series") {
        achieved = closed->absolute_precision();
    }
    const PadicNumber& value = *closed;
    const std::string rational = rational_form(value, achieved);

    if (c.format == "json") {
        Json j;
        j["fn"] = c.fn;
        j["inputs"] = field_json(*ctx);
        j["inputs"]["x"] = exact.to_string();
        j["value"] = show_value(value, achieved);
        j["achieved"] = precision_json(std::min(achieved, value.absolute_precision()));
        j["digits"] = digit_expansion(value, achieved);
        j["rational"] = rational.empty() ? Json(nullptr) : Json(rational);
        j["trace"] = extra;
        out << j.dump(2) << "\n";
        return kExitPass;
    }
    out << c.fn << "(" << exact.to_string() << ") over " << ctx->describe() << "\n";
    out << "  value    = " << show_value(value, achieved) << "\n";
    out << "  digits   = " << digit_expansion(value, achieved) << "\n";
    if (!rational.empty()) out << "  rational = " << rational << "\n";
    out << "  achieved precision " << precision_text(std::min(achieved, value.absolute_precision()));
    if (integral) {
        out << " at depth " << integral->depth << (integral->converged ? "" : " (depth limit)") << ", trace";
        for (long d : integral->trace) out << " " << d;
    }
    out << "\n";
    return kExitPass;
}

CheckRequest make_request(const Config& c, Identity id) {
    CheckRequest r;
    r.identity = id;
    r.field = make_field(c, std::max(c.prec, 1L));
    std::string x = c.x;
    if (x.empty() && id == Identity::GammaConsistency && c.n) x = std::to_string(*c.n);
    if (x.empty()) throw ParseError("--x is required");
    r.x = parse_element(x, *r.field);
    r.n = c.n;
    r.target = c.target;
    r.depth_min = c.depth_min;
    r.depth_max = c.depth_max;
    r.guard = c.guard;
    r.lambda_terms = c.K;
    r.workers = c.workers;
    return r;
}

int cmd_check(const Config& c, std::ostream& out) {
    const auto id = parse_identity(c.identity);
    if (!id) throw ParseError("unknown --identity " + c.identity);
    const CheckReport report = check_identity(make_request(c, *id));
    if (c.format == "json") {
        out << report_json(report).dump(2) << "\n";
    } else {
        out << report_text(report);
    }
    return report.pass ? kExitPass : kExitCheckFailed;
}

int cmd_suite(const Config& c, std::ostream& out, std::ostream& err) {
    SuitePlan plan;
    if (!c.plan_path.empty()) {
        std::ifstream in(c.plan_path);
        if (!in) throw ParseError("cannot read plan " + c.plan_path);
        std::stringstream text;
        text << in.rdbuf();
        plan = SuitePlan::from_json(text.str());
    }
    if (c.seed_given) plan.seed = c.seed;
    if (c.points) plan.points_per_regime = *c.points;
    SuiteConfig config;
    config.p = c.p;
    config.extension_degree = std::max(c.f, 2);
    if (c.f >= 2) config.extension_modulus = parse_modulus(c.modulus);
    config.target = c.target;
    config.depth_min = c.depth_min;
    config.depth_max = c.depth_max;
    config.guard = c.guard;
    const std::vector<CheckReport> reports = run_suite(suite_requests(plan, config), c.workers);

    const CheckReport* first_failure = nullptr;
    long passed = 0;
    for (const auto& r : reports) {
        if (r.pass) {
            ++passed;
        } else if (!first_failure) {
            first_failure = &r;
        }
    }
    if (c.format == "json") {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(report_json(r));
        out << all.dump(2) << "\n";
        if (first_failure) err << "first failure:\n" << report_text(*first_failure);
    } else {
        for (const auto& r : reports) {
            out << report_text(r).substr(0, report_text(r).find('\n')) << "\n";
        }
        out << passed << "/" << reports.size() << " checks passed (seed " << plan.seed << ")\n";
        if (first_failure) out << "first failure:\n" << report_text(*first_failure);
    }
    return first_failure ? kExitCheckFailed : kExitPass;
}

int cmd_sequence(const Config& c, std::ostream& out) {
    const Context probe_field = make_field(c, 1);
    const ExactElement exact = parse_element(c.x.empty() ? throw ParseError("--x is required") : c.x, *probe_field);
    const PadicNumber probe = exact.to_padic(probe_field);
    const long n = require_n(c);
    // Every step divides by p once, so r extra digits keep x_r at full width.
    const long extra = factor_n(c.p, n).second + (probe.is_zero() ? 0 : std::max(0L, -probe.valuation()));
    const Context ctx = make_field(c, c.prec + extra);
    const ShiftSequence seq = build_sequence(exact.to_padic(ctx), n);
    if (c.format == "json") {
        Json j = sequence_json(seq);
        j["text"] = sequence_text(seq);
        out << j.dump(2) << "\n";
    } else {
        out << sequence_text(seq) << "\n";
    }
    return kExitPass;
}

int cmd_lambda(const Config& c, std::ostream& out) {
    const ConvergencePolicy policy = make_policy(c);
    const Context ctx = make_field(c, std::max(c.prec, policy.working_precision() + 2));
    const LambdaTable table = lambda_table(ctx, c.K, policy, c.workers);
    Json all = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
        const auto& e = table.entries[k];
        Json j = integral_json(e);
        j.erase("label");
        j["k"] = k + 1;
        j["value"] = show_value(e.value, e.achieved);
        all.push_back(j);
        text << "lambda_" << k + 1 << " = " << show_value(e.value, e.achieved) << "  (achieved " << precision_text(e.achieved)
             << ", depth " << e.depth << ")\n";
    }
    out << (c.format == "json" ? all.dump(2) + "\n" : text.str());
    return kExitPass;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--p", c.p, "prime")->required();
    sub->add_option("--f", c.f, "degree of the unramified extension")->default_val(1);
    sub->add_option("--modulus", c.modulus, "modulus coefficients c_0,...,c_f (default: deterministic choice)");
    sub->add_option("--prec", c.prec, "relative precision in digits (raised to the policy's need)")->default_val(20);
    sub->add_option("--N", c.target, "target precision N")->default_val(5);
    sub->add_option("--depth-max", c.depth_max, "largest depth n_max of the Volkenborn sums");
    sub->add_option("--depth-min", c.depth_min, "smallest depth n_min");
    sub->add_option("--guard", c.guard, "guard digits")->default_val(4);
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->default_val("text");
    sub->add_option("--workers", c.workers, "worker threads for the sums and suites")->default_val(1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic log-gamma functions: evaluation and identity checks",
                 "padiclg"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    Config c;

    auto* eval = app.add_subcommand("eval", "evaluate one function");
    add_common(eval, c);
    eval->add_option("--fn", c.fn, "lp lp_prime ld lm lm_series rp rp_int phi logp gamma_nat teich")->required();
    eval->add_option("--x", c.x, "argument");
    eval->add_option("--n", c.n, "natural argument for gamma_nat");
    eval->add_option("--K", c.K, "lambda table length for lm_series (default: enough terms for N)");

    auto* check = app.add_subcommand("check", "check one identity");
    add_common(check, c);
    check->add_option("--identity", c.identity,
                      "difference reflection raabe rp_agreement distribution m_lemma morita_dist diamond_dist "
                      "restricted_dist morita_series gamma_consistency wp_agreement")
        ->required();
    check->add_option("--x", c.x, "argument");
    check->add_option("--n", c.n, "n (or m) of the distribution identities");
    check->add_option("--K", c.K, "lambda table length for morita_series (default: enough terms for N)");

    auto* suite = app.add_subcommand("suite", "run the identity catalogue over the fixed sampling plan");
    add_common(suite, c);
    suite->add_option("--seed", c.seed, "sampling seed")->each([&](const std::string&) { c.seed_given = true; });
    suite->add_option("--plan", c.plan_path, "sampling plan (JSON)");
    suite->add_option("--points", c.points, "points per regime (overrides the plan)");

    auto* sequence = app.add_subcommand("sequence", "print the shift sequence of x for n");
    add_common(sequence, c);
    sequence->add_option("--x", c.x, "x")->required();
    sequence->add_option("--n", c.n, "n")->required();

    auto* lambda = app.add_subcommand("lambda", "print the lambda coefficients of the Morita series");
    add_common(lambda, c);
    lambda->add_option("--K", c.K, "number of coefficients (default: enough terms for N)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    // Subcommands share one Config, so the suite's JSON default is applied
    // after parsing.
    if (*suite && suite->get_option("--format")->count() == 0) c.format = "json";

    try {
        if (*eval) return cmd_eval(c, out);
        if (*check) return cmd_check(c, out);
        if (*suite) return cmd_suite(c, out, err);
        if (*sequence) return cmd_sequence(c, out);
        if (*lambda) return cmd_lambda(c, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const IndeterminateError& e) {
        err << "indeterminate: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "plan error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace padic::cli
