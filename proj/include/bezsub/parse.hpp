#ifndef BEZSUB_PARSE_HPP
#define BEZSUB_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bezsub/poly.hpp"

namespace bezsub {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          pos_(position) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Parses a polynomial expression in x: integer literals, + - * / ^ and
/// parentheses. '/' is accepted only with a nonzero constant divisor, so
/// rational coefficients read naturally ("1/2*x + 1/3").
Poly parse_poly(std::string_view text);

}  // namespace bezsub

#endif
