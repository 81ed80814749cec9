#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "padic/context.hpp"
#include "padic/exact.hpp"

namespace padic::cli {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses an element of Q(g):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | 'g' | 'p' | '(' expr ')'
///
/// 'p' is the prime of the context and powers of g are reduced by its
/// modulus. Division and negative exponents need a rational operand.
/// Whitespace is ignored, so "1/5 + 2*g", "p^-2 * (3 + g)" and the
/// canonical output form "5^-1 * (3 + 2*g)" are all accepted.
ExactElement parse_element(std::string_view text, const PadicContext& ctx);

}  // namespace padic::cli
