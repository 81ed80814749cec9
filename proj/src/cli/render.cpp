#include "padic/cli/render.hpp"

#include <algorithm>
#include <sstream>

#include "padic/exact.hpp"

namespace padic::cli {

namespace {

PadicNumber truncated(const PadicNumber& v, long shown) {
    if (v.is_exact_zero()) return v;
    return v.with_absolute_precision(std::min(shown, v.absolute_precision()));
}

}  // namespace

std::string show_value(const PadicNumber& v, long shown) {
    const PadicNumber t = truncated(v, shown);
    if (t.is_exact_zero() || t.is_zero()) return t.to_string();
    return t.to_string_with_precision();
}

std::string rational_form(const PadicNumber& v, long shown) {
    // With few digits almost anything has a small-height preimage; only a
    // form that survives dropping two digits is reported.
    const PadicNumber t = truncated(v, shown);
    const auto q = reconstruct_rational(t);
    if (!q) return {};
    if (t.is_zero()) return t.is_exact_zero() ? q->to_string() : std::string();
    const auto coarse = reconstruct_rational(t.with_absolute_precision(t.absolute_precision() - 2));
    if (!coarse || !(*coarse == *q)) return {};
    return q->to_string();
}

std::string digit_expansion(const PadicNumber& v, long shown) {
    const PadicNumber t = truncated(v, shown);
    if (t.is_zero()) return t.to_string();
    std::ostringstream out;
    out << "p^" << t.valuation() << " *";
    const auto digits = t.digits();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        out << (i == 0 ? " " : ", ") << "g^" << i << ":";
        for (long d : digits[i]) out << " " << d;
    }
    return out.str();
}

namespace {

std::string element_text(const PadicNumber& x) {
    const auto q = reconstruct_rational(x);
    return q ? q->to_string() : x.to_string();
}

}  // namespace

std::string sequence_text(const ShiftSequence& seq) {
    std::ostringstream out;
    out << "[";
    for (std::size_t j = 0; j < seq.x.size(); ++j) out << (j ? ", " : "") << element_text(seq.x[j]);
    out << "] ω=" << seq.omega << " (" << stop_reason_name(seq.stop) << ")";
    return out.str();
}

Json sequence_json(const ShiftSequence& seq) {
    Json j;
    j["x"] = Json::array();
    for (const auto& x : seq.x) j["x"].push_back(element_text(x));
    j["ell"] = seq.ell;
    j["m"] = seq.m;
    j["r"] = seq.r;
    j["omega"] = seq.omega;
    j["stop_reason"] = std::string(stop_reason_name(seq.stop));
    return j;
}

Json precision_json(long achieved) {
    if (achieved >= kExactPrecision) return nullptr;
    return achieved;
}

std::string precision_text(long achieved) {
    return achieved >= kExactPrecision ? "exact" : std::to_string(achieved);
}

Json trace_json(const TraceEntry& entry) {
    Json j;
    j["label"] = entry.label;
    j["differences"] = entry.diffs;
    j["depth"] = entry.depth;
    j["achieved"] = precision_json(entry.achieved);
    j["converged"] = entry.converged;
    return j;
}

Json integral_json(const IntegralResult& r) {
    return trace_json({"", r.trace, r.depth, r.achieved, r.converged});
}

Json report_json(const CheckReport& report) {
    Json inputs;
    inputs["p"] = report.p;
    inputs["f"] = report.f;
    inputs["modulus"] = report.modulus;
    inputs["x"] = report.x;
    if (report.n) {
        inputs["n"] = *report.n;
    } else {
        inputs["n"] = nullptr;
    }
    inputs["policy"] = {{"n_min", report.policy.n_min},
                        {"n_max", report.policy.n_max},
                        {"target", report.policy.target},
                        {"guard", report.policy.guard}};
    inputs["working_precision"] = report.working_precision;

    Json trace;
    trace["lhs_achieved"] = precision_json(report.lhs_achieved);
    trace["rhs_achieved"] = precision_json(report.rhs_achieved);
    trace["required"] = report.required();
    trace["diagnostics"] = report.diagnostics;
    trace["integrals"] = Json::array();
    for (const auto& entry : report.trace) trace["integrals"].push_back(trace_json(entry));

    Json j;
    j["identity"] = std::string(identity_name(report.identity));
    j["inputs"] = std::move(inputs);
    j["lhs"] = show_value(report.lhs, report.lhs_achieved);
    j["rhs"] = show_value(report.rhs, report.rhs_achieved);
    j["residual_valuation"] = report.residual;
    j["target"] = report.target;
    j["pass"] = report.pass;
    j["trace"] = std::move(trace);
    return j;
}

std::string report_text(const CheckReport& report) {
    std::ostringstream out;
    out << (report.pass ? "[PASS] " : "[FAIL] ") << identity_name(report.identity) << "  p=" << report.p;
    if (report.f > 1) out << " f=" << report.f;
    out << " x=" << report.x;
    if (report.n) out << " n=" << *report.n;
    out << "  residual " << report.residual << (report.residual >= report.required() ? " >= " : " < ")
        << "required " << report.required() << " (target " << report.target << ", achieved "
        << precision_text(report.lhs_achieved) << "/" << precision_text(report.rhs_achieved) << ")\n";
    out << "  lhs = " << show_value(report.lhs, report.lhs_achieved) << "\n";
    out << "  rhs = " << show_value(report.rhs, report.rhs_achieved) << "\n";
    for (const auto& d : report.diagnostics) out << "  " << d << "\n";
    return out.str();
}

}  // namespace padic::cli
