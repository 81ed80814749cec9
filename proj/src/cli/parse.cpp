#include "padic/cli/parse.hpp"

#include <cctype>

namespace padic::cli {

namespace {

class Parser {
public:
    Parser(std::string_view text, const PadicContext& ctx) : text_(text), ctx_(ctx) {}

    ExactElement parse() {
        ExactElement value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse \"" + std::string(text_) + "\" at position " + std::to_string(pos_) + ": " +
                         what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    ExactElement expr() {
        ExactElement value = term();
        for (;;) {
            if (accept('+')) {
                value = value + term();
            } else if (accept('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    ExactElement term() {
        ExactElement value = unary();
        for (;;) {
            if (accept('*')) {
                value = value.times(unary(), ctx_);
            } else if (accept('/')) {
                const ExactElement d = unary();
                if (!d.is_rational()) fail("division by an element involving g");
                if (d.is_zero()) fail("division by zero");
                value = value.scaled(1 / d.constant());
            } else {
                return value;
            }
        }
    }

    ExactElement unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ExactElement power() {
        ExactElement base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const mpz_class e = integer();
        if (e > 4096) fail("exponent too large");
        long k = e.get_si();
        if (negative) {
            if (!base.is_rational() || base.is_zero()) fail("negative exponent needs a non-zero rational base");
            base = ExactElement::rational(1 / base.constant());
        }
        ExactElement result = ExactElement::integer(1);
        while (k-- > 0) result = result.times(base, ctx_);
        return result;
    }

    ExactElement primary() {
        skip_space();
        if (accept('(')) {
            ExactElement value = expr();
            if (!accept(')')) fail("expected ')'");
            return value;
        }
        if (accept('g')) {
            if (ctx_.degree() < 2) fail("'g' needs an extension (--f 2 or more)");
            return ExactElement::generator();
        }
        if (accept('p')) return ExactElement::integer(ctx_.prime());
        return ExactElement::rational(mpq_class(integer()));
    }

    std::string_view text_;
    const PadicContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

ExactElement parse_element(std::string_view text, const PadicContext& ctx) {
    return Parser(text, ctx).parse();
}

}  // namespace padic::cli
