#include "padic/checks.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "padic/core.hpp"
#include "padic/errors.hpp"
#include "padic/log.hpp"
#include "padic/loggamma.hpp"

namespace padic {

namespace {

const std::vector<std::pair<Identity, std::string_view>>& name_table() {
    static const std::vector<std::pair<Identity, std::string_view>> table{
        {Identity::Difference, "difference"},
        {Identity::Reflection, "reflection"},
        {Identity::Raabe, "raabe"},
        {Identity::RpAgreement, "rp_agreement"},
        {Identity::Distribution, "distribution"},
        {Identity::MLemma, "m_lemma"},
        {Identity::MoritaDist, "morita_dist"},
        {Identity::DiamondDist, "diamond_dist"},
        {Identity::RestrictedDist, "restricted_dist"},
        {Identity::MoritaSeries, "morita_series"},
        {Identity::GammaConsistency, "gamma_consistency"},
        {Identity::WpAgreement, "wp_agreement"},
    };
    return table;
}

std::string label(std::string_view fn, std::string_view arg) {
    return std::string(fn) + "(" + std::string(arg) + ")";
}

long require_n(const CheckRequest& request) {
    if (!request.n) throw DomainError(std::string(identity_name(request.identity)) + " needs n");
    if (*request.n < 1) throw DomainError("n must be a positive integer");
    return *request.n;
}

void require_zp(const PadicNumber& x, Identity id) {
    if (!x.is_rational() || (!x.is_zero() && x.valuation() < 0)) {
        throw DomainError(std::string(identity_name(id)) + " needs x in Z_p");
    }
}

void require_wp(const PadicNumber& x, Identity id) {
    if (!in_Wp(x)) throw DomainError(std::string(identity_name(id)) + " needs x in W_p");
}

struct Sides {
    Evaluation lhs;
    Evaluation rhs;
    long target;
    ConvergencePolicy policy;
    std::vector<std::string> diagnostics;
    bool consistent = true;
};

std::string describe_sequence(const ShiftSequence& seq) {
    return "shift sequence: m = " + std::to_string(seq.m) + ", r = " + std::to_string(seq.r) +
           ", omega = " + std::to_string(seq.omega) + ", stop = " + std::string(stop_reason_name(seq.stop));
}

Sides evaluate(const CheckRequest& request, const PadicNumber& x, const ConvergencePolicy& policy) {
    const Context& ctx = x.context();
    const long p = ctx->prime();
    const unsigned w = request.workers;
    const Evaluation zero = Evaluation::known(PadicNumber::zero(ctx));
    const auto lp_of = [&](const PadicNumber& y, std::string_view arg) {
        return Evaluation::integral(label("LGamma_p", arg), lp(y, policy, w));
    };

    switch (request.identity) {
        case Identity::Difference: {
            Evaluation rhs = chi(x) == 1 ? Evaluation::known(log_p(x)) : zero;
            return {lp_of(x + 1L, "x+1") - lp_of(x, "x"), rhs, policy.target, policy, {}};
        }
        case Identity::Reflection:
            return {lp_of(x, "x") + lp_of(1L - x, "1-x"), zero, policy.target, policy, {}};
        case Identity::Raabe: {
            const ConvergencePolicy nested = ConvergencePolicy::nested(p, request.target);
            ConvergencePolicy single = policy;
            // The derivative is scaled by x - 1, which costs -v(x - 1) digits.
            const PadicNumber scale = x - 1L;
            single.target = nested.target + (scale.is_zero() ? 0 : std::max(0L, -scale.valuation()));
            std::atomic<long> inner_floor{kExactPrecision};
            const Integrand inner = [&](const PadicNumber& y) {
                const IntegralResult r = lp(y, nested);
                long seen = inner_floor.load();
                while (r.achieved < seen && !inner_floor.compare_exchange_weak(seen, r.achieved)) {
                }
                return r.value;
            };
            const IntegralResult outer = integrate(inner, x, nested, w);
            Evaluation lhs = Evaluation::integral("integral of LGamma_p(x+t)", outer);
            lhs.achieved = std::min(lhs.achieved, inner_floor.load());
            lhs.trace.front().achieved = lhs.achieved;
            const Evaluation derivative =
                Evaluation::integral("LGamma_p'(x)", lp_prime(x, single, w)).times(scale);
            Sides s{lhs, derivative - Evaluation::known(rp_closed(x)), nested.target, nested, {}};
            s.diagnostics.push_back("inner integrals at fixed depth " + std::to_string(nested.n_max) +
                                    ", lowest inner achieved precision " + std::to_string(inner_floor.load()));
            return s;
        }
        case Identity::RpAgreement:
            return {Evaluation::known(rp_closed(x)),
                    Evaluation::integral(label("r_p", "x"), rp_integral(x, policy, w)), policy.target, policy, {}};
        case Identity::Distribution: {
            const long n = require_n(request);
            Sides s{dist_lhs(x, n, policy, w), dist_rhs(x, n, policy, w), policy.target, policy, {}};
            s.diagnostics.push_back(describe_sequence(build_sequence(x, n)));
            return s;
        }
        case Identity::MLemma: {
            const long m = require_n(request);
            if (m % p == 0) throw DomainError("m_lemma needs p not dividing m");
            const Evaluation rhs =
                lp_of(x, "x") - Evaluation::known(rp_closed(x)).times(log_of_natural(ctx, m));
            return {dist_lhs(x, m, policy, w), rhs, policy.target, policy, {}};
        }
        case Identity::MoritaDist: {
            const long n = require_n(request);
            require_zp(x, request.identity);
            if (n % p == 0) throw DomainError("morita_dist needs p not dividing n");
            const PadicNumber log_n = log_of_natural(ctx, n);
            Evaluation lhs = zero;
            for (long k = 0; k < n; ++k) {
                lhs += Evaluation::integral(
                    label("LGamma_M", "(x+" + std::to_string(k) + ")/" + std::to_string(n)),
                    lm((x + k).divided_by_integer(n), policy, w));
            }
            const Evaluation gamma_x = Evaluation::integral(label("LGamma_M", "x"), lm(x, policy, w));
            const Evaluation rhs = gamma_x - Evaluation::known(x - dwork_shift(x)).times(log_n);
            const Evaluation general = gamma_x - Evaluation::known(rp_closed(x)).times(log_n);
            const ShiftSequence seq = build_sequence(x, n);
            Sides s{lhs, rhs, policy.target, policy, {describe_sequence(seq)}};
            const bool match = seq.omega == 0 && agrees(rp_closed(x), x - dwork_shift(x)) &&
                               agrees(rhs.value, general.value);
            s.diagnostics.push_back(std::string("right side matches the general form: ") + (match ? "yes" : "no"));
            s.consistent = match;
            return s;
        }
        case Identity::DiamondDist: {
            const long n = require_n(request);
            require_wp(x, request.identity);
            const PadicNumber log_n = log_of_natural(ctx, n);
            Evaluation lhs = zero;
            for (long k = 0; k < n; ++k) {
                lhs += Evaluation::integral(
                    label("LGamma_D", "(x+" + std::to_string(k) + ")/" + std::to_string(n)),
                    ld((x + k).divided_by_integer(n), policy, w));
            }
            const PadicNumber half = PadicNumber::from_rational(ctx, 1, 2);
            const Evaluation rhs = Evaluation::integral(label("LGamma_D", "x"), ld(x, policy, w)) -
                                   Evaluation::known(x - half).times(log_n);
            const Evaluation general = lp_of(x, "x") - Evaluation::known(rp_closed(x)).times(log_n);
            const ShiftSequence seq = build_sequence(x, n);
            Sides s{lhs, rhs, policy.target, policy, {describe_sequence(seq)}};
            const bool match = seq.omega == 0 && agrees(rp_closed(x), x - half) && agrees(rhs.value, general.value);
            s.diagnostics.push_back(std::string("right side matches the general form: ") + (match ? "yes" : "no"));
            s.consistent = match;
            return s;
        }
        case Identity::RestrictedDist: {
            const long n = require_n(request);
            require_zp(x, request.identity);
            if (n % p != 0) throw DomainError("restricted_dist needs p dividing n");
            Evaluation lhs = zero;
            long kept = 0;
            for (long j = 0; j < n; ++j) {
                const PadicNumber shifted = x + j;
                if (shifted.is_zero() || shifted.valuation() != 0) continue;
                ++kept;
                lhs += lp_of(shifted.divided_by_integer(n), "(x+" + std::to_string(j) + ")/" + std::to_string(n));
            }
            const Evaluation rhs =
                lp_of(x, "x") - Evaluation::known(rp_closed(x)).times(log_of_natural(ctx, n));
            Sides s{lhs, rhs, policy.target, policy, {}};
            s.diagnostics.push_back("terms kept in the restricted sum: " + std::to_string(kept));
            return s;
        }
        case Identity::MoritaSeries: {
            if (x.valuation() < 1) throw DomainError("morita_series needs v(x) >= 1");
            const LambdaTable table = lambda_table(ctx, request.lambda_terms, policy, w);
            const SeriesValue series = lm_series(x, table);
            Evaluation lhs{series.value, series.achieved, {}};
            for (std::size_t k = 0; k < table.entries.size(); ++k) {
                lhs.trace.push_back(Evaluation::integral("lambda_" + std::to_string(k + 1), table.entries[k]).trace[0]);
            }
            Sides s{lhs, lp_of(x, "x"), policy.target, policy, {}};
            s.diagnostics.push_back("series terms " + std::to_string(series.terms) + ", tail bound " +
                                    std::to_string(series.tail_bound));
            return s;
        }
        case Identity::GammaConsistency: {
            if (!request.x.is_rational() || request.x.constant().get_den() != 1 || request.x.constant() < 1) {
                throw DomainError("gamma_consistency needs a positive integer x");
            }
            const long n = request.x.constant().get_num().get_si();
            const mpz_class gamma = morita_gamma_nat(p, n);
            Sides s{lp_of(x, "n"), Evaluation::known(log_p(PadicNumber::from_integer(ctx, gamma))), policy.target,
                    policy, {}};
            s.diagnostics.push_back("Gamma_M(" + std::to_string(n) + ") = " + gamma.get_str());
            return s;
        }
        case Identity::WpAgreement:
            require_wp(x, request.identity);
            return {Evaluation::integral(label("LGamma_D", "x"), ld(x, policy, w)), lp_of(x, "x"), policy.target,
                    policy, {}};
    }
    throw InvalidArgument("unknown identity");
}

}  // namespace

const std::vector<Identity>& all_identities() {
    static const std::vector<Identity> ids = [] {
        std::vector<Identity> out;
        for (const auto& [id, name] : name_table()) out.push_back(id);
        return out;
    }();
    return ids;
}

std::string_view identity_name(Identity id) {
    for (const auto& [candidate, name] : name_table()) {
        if (candidate == id) return name;
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
    for (const auto& [id, candidate] : name_table()) {
        if (candidate == name) return id;
    }
    return std::nullopt;
}

bool identity_uses_n(Identity id) {
    switch (id) {
        case Identity::Distribution:
        case Identity::MLemma:
        case Identity::MoritaDist:
        case Identity::DiamondDist:
        case Identity::RestrictedDist:
            return true;
        default:
            return false;
    }
}

long CheckReport::required() const {
    return std::min({target, lhs_achieved, rhs_achieved});
}

ConvergencePolicy resolve_policy(const CheckRequest& request) {
    ConvergencePolicy policy = ConvergencePolicy::defaults(request.field->prime(), request.target);
    if (request.depth_max) policy.n_max = *request.depth_max;
    if (request.depth_min) policy.n_min = *request.depth_min;
    policy.n_min = std::min(policy.n_min, policy.n_max);
    policy.guard = request.guard;
    policy.validate();
    return policy;
}

CheckReport check_identity(const CheckRequest& request) {
    if (!request.field) throw InvalidArgument("check request without a field");
    const ConvergencePolicy policy = resolve_policy(request);
    if (identity_uses_n(request.identity)) require_n(request);

    // Extra digits for arguments with negative valuation and for the
    // division by n; the nested integral needs the inner depth on top.
    const PadicNumber probe = request.x.to_padic(request.field);
    const long negative = probe.is_zero() ? 0 : std::max(0L, -probe.valuation());
    const long vn = request.n && *request.n >= 1 ? factor_n(request.field->prime(), *request.n).second : 0;
    long base = policy.working_precision();
    if (request.identity == Identity::Raabe) {
        const ConvergencePolicy nested = ConvergencePolicy::nested(request.field->prime(), request.target);
        base = std::max(base, nested.working_precision() + nested.n_max);
    }
    const long wp = std::max(request.field->precision(), base + negative + vn + 2);
    const Context ctx = request.field->with_precision(wp);
    const PadicNumber x = request.x.to_padic(ctx);

    Sides sides = evaluate(request, x, policy);
    CheckReport report{
        .identity = request.identity,
        .p = ctx->prime(),
        .f = ctx->degree(),
        .modulus = ctx->modulus_string(),
        .x = request.x.to_string(),
        .n = identity_uses_n(request.identity) ? request.n : std::nullopt,
        .policy = sides.policy,
        .working_precision = wp,
        .lhs = sides.lhs.value,
        .rhs = sides.rhs.value,
        .lhs_achieved = sides.lhs.achieved,
        .rhs_achieved = sides.rhs.achieved,
        .residual = residual_valuation(sides.lhs.value, sides.rhs.value),
        .target = sides.target,
        .pass = false,
        .trace = sides.lhs.trace,
        .diagnostics = std::move(sides.diagnostics),
    };
    report.trace.insert(report.trace.end(), sides.rhs.trace.begin(), sides.rhs.trace.end());
    // Differences are expected to be nondecreasing from n = 3 on; a drop is
    // reported, not treated as failure.
    for (const auto& entry : report.trace) {
        for (std::size_t k = 3; k < entry.diffs.size(); ++k) {
            if (entry.diffs[k] < entry.diffs[k - 1]) {
                report.diagnostics.push_back("differences of " + entry.label + " drop at depth " +
                                             std::to_string(k + 1));
                break;
            }
        }
    }
    report.pass = sides.consistent && report.residual >= report.required();
    return report;
}

}  // namespace padic
