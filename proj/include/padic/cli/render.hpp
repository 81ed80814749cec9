#pragma once

#include <string>

#include <json.hpp>

#include "padic/checks.hpp"
#include "padic/distribution.hpp"
#include "padic/number.hpp"
#include "padic/volkenborn.hpp"

namespace padic::cli {

using Json = nlohmann::ordered_json;

/// Canonical form of v truncated to absolute precision `shown`, followed by
/// "+ O(p^A)" unless v is an exact zero.
std::string show_value(const PadicNumber& v, long shown);

/// Rational form recovered from the digits kept at precision `shown` when
/// the same form is recovered from two digits fewer; otherwise empty.
std::string rational_form(const PadicNumber& v, long shown);

/// Base-p digits, one list per coefficient of g^i, least significant first,
/// rendered as "g^0: 1 2 0 ..., g^1: ...", prefixed with the valuation.
std::string digit_expansion(const PadicNumber& v, long shown);

/// x_j in rational form when available, as "[1, 1, 1] ω=2 (r-exhausted)".
std::string sequence_text(const ShiftSequence& seq);
Json sequence_json(const ShiftSequence& seq);

/// Achieved precision; exact values give null / "exact".
Json precision_json(long achieved);
std::string precision_text(long achieved);

Json trace_json(const TraceEntry& entry);
Json integral_json(const IntegralResult& r);

/// Top-level keys: identity, inputs, lhs, rhs, residual_valuation, target,
/// pass, trace.
Json report_json(const CheckReport& report);
/// One status line, both sides and the diagnostics.
std::string report_text(const CheckReport& report);

}  // namespace padic::cli
