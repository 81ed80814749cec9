#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic/context.hpp"
#include "padic/distribution.hpp"
#include "padic/exact.hpp"
#include "padic/number.hpp"
#include "padic/volkenborn.hpp"

namespace padic {

enum class Identity {
    Difference,
    Reflection,
    Raabe,
    RpAgreement,
    Distribution,
    MLemma,
    MoritaDist,
    DiamondDist,
    RestrictedDist,
    MoritaSeries,
    GammaConsistency,
    WpAgreement,
};

const std::vector<Identity>& all_identities();
std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
/// Whether the identity takes the integer n.
bool identity_uses_n(Identity id);

/// Everything a check needs. The field of `field` is used; its precision is
/// raised to what the policy requires.
struct CheckRequest {
    Identity identity = Identity::Difference;
    Context field;
    ExactElement x;
    std::optional<long> n;
    long target = 5;
    std::optional<long> depth_min;
    std::optional<long> depth_max;
    long guard = 4;
    /// Length of the lambda table for morita_series; 0 means
    /// default_lambda_terms(p, target).
    long lambda_terms = 0;
    unsigned workers = 1;
};

struct CheckReport {
    Identity identity = Identity::Difference;
    long p = 0;
    int f = 1;
    std::string modulus;
    std::string x;
    std::optional<long> n;
    ConvergencePolicy policy;
    long working_precision = 0;
    PadicNumber lhs;
    PadicNumber rhs;
    long lhs_achieved = 0;
    long rhs_achieved = 0;
    long residual = 0;
    long target = 0;
    bool pass = false;
    std::vector<TraceEntry> trace;
    std::vector<std::string> diagnostics;

    /// min(target, lhs_achieved, rhs_achieved): the residual a pass needs.
    long required() const;
};

/// Policy a request resolves to (defaults for p with the overrides applied).
ConvergencePolicy resolve_policy(const CheckRequest& request);

/// Computes both sides of the identity and their residual valuation.
/// Throws DomainError when x or n is outside the identity's regime and
/// IndeterminateError when the regime cannot be decided.
CheckReport check_identity(const CheckRequest& request);

}  // namespace padic
