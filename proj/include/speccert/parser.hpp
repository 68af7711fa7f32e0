#ifndef SPECCERT_PARSER_HPP
#define SPECCERT_PARSER_HPP

// Text expression language for all inputs: integer literals, one or two
// named variables, + - * / ^ with standard precedence, parentheses.
// Exponents are literal nonnegative integers and ^ binds tighter than
// unary minus, so -t^2 parses as -(t^2).

#include "speccert/bipoly.hpp"

namespace speccert {

struct parse_error : std::runtime_error {
    size_t position;  // 0-based offset into the input text
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Univariate expression over `var` (e.g. "t" or "alpha").
RatFn parse_expr(const std::string& text, const std::string& var);

// Bivariate polynomial expression over inner variable `tvar` and outer
// variable `xvar`; division is only allowed by subexpressions free of
// both variables, and the result must be polynomial.
BiPoly parse_bipoly(const std::string& text, const std::string& tvar,
                    const std::string& xvar);

// "(x-expr, y-expr)" or "O".
struct ParsedPoint {
    bool infinity = false;
    RatFn x, y;
};
ParsedPoint parse_point(const std::string& text, const std::string& var);

}  // namespace speccert

#endif
