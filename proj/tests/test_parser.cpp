#include "doctest.h"
#include "speccert/parser.hpp"

using namespace speccert;

TEST_CASE("expression parsing") {
    CHECK(parse_expr("t^2-1", "t") == parse_expr("(t-1)*(t+1)", "t"));
    CHECK(parse_expr("-t^2", "t") == RatFn(Rat(0)) - parse_expr("t", "t") * parse_expr("t", "t"));
    // denominators are kept monic; the sign moves into the numerator
    CHECK(parse_expr("1/(1-alpha^2)", "alpha").den() == parse_expr("alpha^2-1", "alpha").num());
    CHECK(parse_expr("1/(1-alpha^2)", "alpha").num() == Poly::constant(-1));
    CHECK(parse_expr("2^3", "t").constant_value() == 8);
    CHECK(parse_expr("t^0", "t").constant_value() == 1);
    CHECK(parse_expr("3/4", "t").constant_value() == Rat(3, 4));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expr("t^^2", "t"), parse_error);
    CHECK_THROWS_AS(parse_expr("t +", "t"), parse_error);
    CHECK_THROWS_AS(parse_expr("(t", "t"), parse_error);
    CHECK_THROWS_AS(parse_expr("x+1", "t"), parse_error);  // unknown variable
    CHECK_THROWS_AS(parse_expr("t^(-1)", "t"), parse_error);
    try {
        parse_expr("t^^2", "t");
    } catch (const parse_error& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("render / parse round trip") {
    for (const char* s :
         {"t", "t^2-1", "-t^2", "1/(1-t^2)", "(3*t^2-4)*(3*t^2-1)^2",
          "4*t^3*(t+2)/(t^2+2*t-1)^2", "t^4+2*t^2-8*t+1", "-1/2*t+3"}) {
        RatFn f = parse_expr(s, "t");
        CHECK(parse_expr(f.render(), "t") == f);
    }
}

TEST_CASE("bivariate polynomial parsing") {
    BiPoly phi = parse_bipoly("a^4+2*t^2*a^2-8*t^2*a+t^4-t*(4*a^3-4*t^2*a+4*t^2)", "t", "a");
    CHECK(phi.degree() == 4);
    // division only by variable-free constants
    CHECK_NOTHROW(parse_bipoly("a^2/4+t", "t", "a"));
    CHECK_THROWS(parse_bipoly("a/t", "t", "a"));
}

TEST_CASE("point parsing") {
    ParsedPoint o = parse_point("O", "t");
    CHECK(o.infinity);
    ParsedPoint p = parse_point("(t, t)", "t");
    CHECK_FALSE(p.infinity);
    CHECK(p.x == parse_expr("t", "t"));
    CHECK(p.y == parse_expr("t", "t"));
    ParsedPoint q = parse_point("(4*t^2*(t+2)/(t^2+2*t-1)^2, 0)", "t");
    CHECK(q.y.is_zero());
    CHECK_THROWS_AS(parse_point("(1, 2", "t"), parse_error);
}
