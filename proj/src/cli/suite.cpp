#include "padic/cli/suite.hpp"

#include <future>

#include <json.hpp>

#include "padic/errors.hpp"
#include "padic/sampling.hpp"

namespace padic::cli {

SuitePlan SuitePlan::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SuitePlan plan;
    if (j.contains("seed")) plan.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("points_per_regime")) plan.points_per_regime = j.at("points_per_regime").get<long>();
    if (j.contains("n_values")) plan.n_values = j.at("n_values").get<std::vector<long>>();
    if (j.contains("identities")) {
        plan.identities.clear();
        for (const auto& name : j.at("identities")) {
            const auto id = parse_identity(name.get<std::string>());
            if (!id) throw InvalidArgument("unknown identity in plan: " + name.get<std::string>());
            plan.identities.push_back(*id);
        }
    }
    if (plan.points_per_regime < 1) throw InvalidArgument("points_per_regime must be positive");
    for (long n : plan.n_values) {
        if (n < 1) throw InvalidArgument("n_values must be positive");
    }
    return plan;
}

namespace {

std::vector<Regime> regimes_for(Identity id) {
    using R = Regime;
    switch (id) {
        case Identity::MoritaDist:
        case Identity::RestrictedDist:
            return {R::Unit, R::MultipleOfP};
        case Identity::DiamondDist:
        case Identity::WpAgreement:
            return {R::NegativeValuation, R::ExtensionOutsideFp};
        case Identity::MoritaSeries:
            return {R::MultipleOfP};
        case Identity::GammaConsistency:
            return {R::Unit};
        default:
            return all_regimes();
    }
}

std::vector<long> n_choices(Identity id, long p, const std::vector<long>& values) {
    std::vector<long> out;
    for (long n : values) {
        const bool divisible = n % p == 0;
        if ((id == Identity::MoritaDist || id == Identity::MLemma) && divisible) continue;
        if (id == Identity::RestrictedDist && !divisible) continue;
        out.push_back(n);
    }
    if (out.empty()) {
        // Keep the identity exercised even when the plan's values miss it.
        out.push_back(id == Identity::RestrictedDist ? p : (p == 2 ? 3 : 2));
    }
    return out;
}

}  // namespace

std::vector<CheckRequest> suite_requests(const SuitePlan& plan, const SuiteConfig& config) {
    const Context rational_field = PadicContext::create(config.p, 1, 1);
    const Context extension_field =
        PadicContext::create(config.p, std::max(config.extension_degree, 2), 1, config.extension_modulus);
    SampleGenerator gen(plan.seed);
    std::vector<CheckRequest> out;
    for (Identity id : plan.identities) {
        const std::vector<long> ns = n_choices(id, config.p, plan.n_values);
        for (Regime regime : regimes_for(id)) {
            for (long k = 0; k < plan.points_per_regime; ++k) {
                CheckRequest r;
                r.identity = id;
                r.field = regime_needs_extension(regime) ? extension_field : rational_field;
                r.x = id == Identity::GammaConsistency ? ExactElement::integer(gen.integer(1, 12))
                                                       : gen.draw(regime, config.p);
                if (identity_uses_n(id)) r.n = ns[static_cast<std::size_t>(gen.integer(0, static_cast<long>(ns.size()) - 1))];
                r.target = config.target;
                r.depth_min = config.depth_min;
                r.depth_max = config.depth_max;
                r.guard = config.guard;
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<CheckReport> run_suite(const std::vector<CheckRequest>& requests, unsigned workers) {
    std::vector<CheckReport> reports;
    if (workers <= 1) {
        for (const auto& r : requests) reports.push_back(check_identity(r));
        return reports;
    }
    std::vector<std::future<CheckReport>> jobs;
    for (std::size_t start = 0; start < requests.size(); start += workers) {
        jobs.clear();
        const std::size_t end = std::min(requests.size(), start + workers);
        for (std::size_t i = start; i < end; ++i) {
            jobs.push_back(std::async(std::launch::async, [&requests, i] { return check_identity(requests[i]); }));
        }
        for (auto& job : jobs) reports.push_back(job.get());
    }
    return reports;
}

}  // namespace padic::cli
