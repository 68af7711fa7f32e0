#include "doctest.h"
#include "speccert/descent.hpp"
#include "speccert/parser.hpp"

using namespace speccert;

namespace {
Poly P(const std::string& s) { return parse_expr(s, "t").num(); }
}  // namespace

TEST_CASE("2-descent base from y^2 = x(x-t)(x+t)") {
    FactorBase base = build_base_2descent(Poly(), P("t"), P("-t"));
    CHECK(base.size() == 3);
    CHECK(base.render() == "{-1, t, 2}");
    CHECK_THROWS(build_base_2descent(P("t"), P("t"), P("-t")));
}

TEST_CASE("square-class deduplication") {
    FactorBase base;
    base.add(Generator{Generator::Kind::Prime, Int(2), Poly(), "x"});
    base.add(Generator{Generator::Kind::Prime, Int(2), Poly(), "y"});
    base.add(Generator{Generator::Kind::Polynomial, Int(0), P("t"), "x"});
    base.add(Generator{Generator::Kind::Polynomial, Int(0), P("t"), "y"});
    CHECK(base.size() == 2);
}

TEST_CASE("single-base criterion on {-1, t, 2}") {
    FactorBase base = build_base_2descent(Poly(), P("t"), P("-t"));

    BaseCheck holds = check_base(base, Rat(3));
    CHECK(holds.verdict == Verdict::Holds);
    CHECK(holds.checks.size() == 7);
    for (const ProductCheck& c : holds.checks) CHECK_FALSE(c.square);

    // t0 = 2: the product 2 * t evaluates to the square 4
    BaseCheck f2 = check_base(base, Rat(2));
    CHECK(f2.verdict == Verdict::Fails);
    CHECK(f2.witness_value == 4);
    CHECK(is_square(f2.witness_value));

    // t0 = 4: the generator t alone is the square 4
    BaseCheck f4 = check_base(base, Rat(4));
    CHECK(f4.verdict == Verdict::Fails);
    CHECK(f4.witness_value == 4);

    // a vanishing generator is indeterminate, not a failure
    BaseCheck zero = check_base(base, Rat(0));
    CHECK(zero.verdict == Verdict::Indeterminate);
    CHECK_FALSE(zero.reason.empty());
}

TEST_CASE("witnesses are genuine squares and checks stop at the witness") {
    FactorBase base = build_base_2descent(Poly(), Poly::constant(1), P("t"));
    for (long n = -20; n <= 20; ++n) {
        BaseCheck r = check_base(base, Rat(n));
        if (r.verdict == Verdict::Fails) {
            CHECK(is_square(r.witness_value));
            CHECK(r.checks.back().mask == r.witness_mask);
        } else if (r.verdict == Verdict::Holds) {
            CHECK(r.checks.size() == (uint64_t{1} << base.size()) - 1);
        }
    }
}

TEST_CASE("2-isogeny bases and applicability guard") {
    auto [g_phi, g_phihat] = build_base_2isogeny(P("t+1"), P("2*t"));
    CHECK(g_phi.render() == "{-1, 2, t}");
    CHECK(g_phihat.render() == "{-1, t^2-6*t+1}");
    // a^2 - 4b = (t-1)^2 is a square: full 2-torsion, criterion inapplicable
    CHECK_THROWS_AS(build_base_2isogeny(P("t+1"), P("t")), criterion_inapplicable);
    CHECK_THROWS(build_base_2isogeny(P("t"), Poly()));
}

TEST_CASE("criterion verdict aggregation over two sides") {
    auto [g_phi, g_phihat] = build_base_2isogeny(P("t+1"), P("2*t"));
    CriterionReport rep = check_criterion_2isogeny(g_phi, g_phihat, Rat(3));
    CHECK(rep.verdict == Verdict::Holds);
    REQUIRE(rep.sides.size() == 2);
    CHECK(rep.sides[0].first == "G_phi");
    CHECK(rep.sides[1].first == "G_phihat");
    // t0 = 2: G_phi contains the value 2*2 = 4
    CHECK(check_criterion_2isogeny(g_phi, g_phihat, Rat(2)).verdict == Verdict::Fails);
    // t0 = 0: generator t vanishes
    CHECK(check_criterion_2isogeny(g_phi, g_phihat, Rat(0)).verdict ==
          Verdict::Indeterminate);
}

TEST_CASE("scaling by squares never changes a verdict") {
    FactorBase base = build_base_2descent(Poly(), P("t"), P("-t"));
    for (long n : {3L, 5L, 7L, 11L}) {
        Rat t0(n);
        BaseCheck r = check_base(base, t0);
        for (const ProductCheck& c : r.checks) {
            CHECK(is_square(c.value * Rat(9, 4)) == c.square);
            CHECK(is_square(c.value * Rat(1, 16)) == c.square);
        }
    }
}
