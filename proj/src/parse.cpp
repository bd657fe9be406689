#include "bezsub/parse.hpp"

#include <cctype>

namespace bezsub {

namespace {

// Recursive-descent parser over the raw character stream.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('+'|'-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'x' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Poly divisor = unary();
                if (divisor.degree() > 0) {
                    pos_ = at;
                    fail("division by non-constant polynomial");
                }
                if (divisor.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = (Rat(1) / divisor.coeff(0)) * acc;
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (accept('^')) {
            const unsigned long e = integer_literal("exponent");
            if (e > 4096) fail("exponent too large");
            return pow(base, e);
        }
        return base;
    }

    Poly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(Rat(mpz_class(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    unsigned long integer_literal(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(std::string("expected ") + what);
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (v > 1000000) fail(std::string(what) + " out of range");
            ++pos_;
        }
        return v;
    }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace bezsub
