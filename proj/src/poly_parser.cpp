#include "specpol/poly_parser.hpp"

#include <cctype>

namespace specpol {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": " + message),
      position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly run() {
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, pos_);
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Poly expression() {
        Poly acc = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            const Poly rhs = term();
            if (c == '+') acc += rhs; else acc -= rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '/') {
                const std::size_t at = pos_;
                ++pos_;
                const Poly divisor = factor();
                if (!divisor.is_constant() || divisor.is_zero()) {
                    pos_ = at;
                    fail("division requires a nonzero constant divisor");
                }
                acc = acc / divisor.coeff(0);
            } else if (starts_factor(c)) {
                acc *= factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        char c = peek();
        bool negate = false;
        while (c == '+' || c == '-') {
            if (c == '-') negate = !negate;
            ++pos_;
            c = peek();
        }
        Poly base = atom(c);
        if (peek() == '^') {
            ++pos_;
            base = base.pow(exponent());
        }
        return negate ? -base : base;
    }

    Poly atom(char c) {
        if (c == 'x') {
            ++pos_;
            return Poly::variable();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly(Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail(std::string("unknown symbol '") + c + "'; the variable is x");
        fail("expected a number, x or '('");
    }

    unsigned exponent() {
        const char c = peek();
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail("'^' needs a nonnegative integer exponent");
        const Integer e = integer_literal();
        if (e > 100000) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    Integer integer_literal() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }
};

}  // namespace

Poly parse_poly(std::string_view text) {
    return Parser(text).run();
}

}  // namespace specpol
