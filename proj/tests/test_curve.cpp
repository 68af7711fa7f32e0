#include "doctest.h"
#include "speccert/curve.hpp"
#include "speccert/parser.hpp"

#include <algorithm>

using namespace speccert;

namespace {
RatFn rf(const std::string& s, const std::string& v = "t") { return parse_expr(s, v); }

uint64_t state = 0xa4093822299f31d0ULL;
long rnd(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 11) % static_cast<uint64_t>(hi - lo + 1));
}
}  // namespace

TEST_CASE("group law axioms over Q") {
    CurveQ e = CurveQ::short_model(Rat(-729), Rat(729));
    PtQ g1 = PtQ::affine(Rat(-9), Rat(81));
    PtQ g2 = PtQ::affine(Rat(-27), Rat(27));
    REQUIRE(on_curve(e, g1));
    REQUIRE(on_curve(e, g2));
    for (int i = 0; i < 120; ++i) {
        PtQ p = add(e, smul(e, rnd(-4, 4), g1), smul(e, rnd(-4, 4), g2));
        PtQ q = add(e, smul(e, rnd(-4, 4), g1), smul(e, rnd(-4, 4), g2));
        PtQ r = add(e, smul(e, rnd(-4, 4), g1), smul(e, rnd(-4, 4), g2));
        CHECK(on_curve(e, p));
        CHECK(add(e, add(e, p, q), r) == add(e, p, add(e, q, r)));
        CHECK(add(e, p, q) == add(e, q, p));
        CHECK(add(e, p, neg(e, p)).inf);
        CHECK(smul(e, 2, p) == dbl(e, p));
    }
}

TEST_CASE("group law over the function field") {
    CurveT e = CurveT::short_model(rf("-t^2"), rf("t^2"));
    PtT p = PtT::affine(rf("t"), rf("t"));
    PtT q = PtT::affine(rf("0"), rf("t"));
    REQUIRE(on_curve(e, p));
    REQUIRE(on_curve(e, q));
    PtT s = add(e, p, q);
    CHECK(on_curve(e, s));
    CHECK(add(e, s, neg(e, q)) == p);
    CHECK(add(e, add(e, p, q), p) == add(e, p, add(e, q, p)));
    CHECK(dbl(e, PtT::affine(rf("t"), rf("-t"))) == neg(e, dbl(e, p)));
}

TEST_CASE("isogeny-form shift preserves the discriminant") {
    // y^2 = x^3 - 4x + 4 has 2-torsion? no; use y^2 = x^3 - x with T = (1, 0)
    CurveQ e = CurveQ::short_model(Rat(-1), Rat(0));
    IsogenyShift<Rat> sh = shift_to_isogeny_form(e, PtQ::affine(Rat(1), Rat(0)));
    CHECK(discriminant(sh.curve) == discriminant(e));
    PtQ p = PtQ::affine(Rat(0), Rat(0));
    CHECK(on_curve(sh.curve, sh.transport(p)));
    CHECK_THROWS(shift_to_isogeny_form(e, PtQ::affine(Rat(2), Rat(0))));
}

TEST_CASE("two-division quartic and halving") {
    // fiber with a halvable point: y^2 = x^3 - x + 1, P = (-1, 1)
    CurveQ e = CurveQ::short_model(Rat(-1), Rat(1));
    PtQ p = PtQ::affine(Rat(-1), Rat(1));
    REQUIRE(on_curve(e, p));
    Poly quartic = two_division_quartic(e, p);
    CHECK(quartic == parse_expr("x^4+4*x^3+2*x^2-12*x+5", "x").num());
    std::vector<PtQ> halves = halve_q(e, p);
    REQUIRE(halves.size() == 1);
    CHECK(halves[0] == PtQ::affine(Rat(1), Rat(1)));
    CHECK(dbl(e, halves[0]) == p);
}

TEST_CASE("halving round trips through doubling") {
    CurveQ e = CurveQ::short_model(Rat(-4), Rat(4));
    std::vector<PtQ> gens = {PtQ::affine(Rat(2), Rat(2)), PtQ::affine(Rat(0), Rat(2))};
    for (int i = 0; i < 20; ++i) {
        PtQ p = add(e, smul(e, rnd(-3, 3), gens[0]), smul(e, rnd(-3, 3), gens[1]));
        if (p.inf || sgn(p.y) == 0) continue;
        PtQ d = dbl(e, p);
        if (d.inf || sgn(d.y) == 0) continue;
        std::vector<PtQ> halves = halve_q(e, d);
        CHECK(std::find(halves.begin(), halves.end(), p) != halves.end());
        for (const PtQ& h : halves) CHECK(dbl(e, h) == d);
    }
}

TEST_CASE("division polynomial commutes with specialization") {
    CurveT e = CurveT::short_model(rf("-t^2"), rf("t^2"));
    PtT p = PtT::affine(rf("t"), rf("t"));
    BiPolyR d2 = two_division_poly(e, p);
    for (long n : {2L, 3L, 5L, 27L}) {
        Rat t0(n);
        auto [cleared, mult] = d2.clear_denominators();
        Poly special = cleared.specialize_t(t0, "x");
        CurveQ eq = specialize(e, t0);
        PtQ pq = specialize_pt(p, t0);
        Poly direct = two_division_quartic(eq, pq) * mult.eval(t0);
        CHECK(special == direct);
    }
}

TEST_CASE("torsion over Q") {
    // y^2 = x^3 - 927x + 10530 has a single rational 2-torsion point (15, 0)
    TorsionGroup t30 = torsion_q(CurveQ::short_model(Rat(-927), Rat(10530)));
    CHECK(t30.structure == std::vector<unsigned>({2}));
    REQUIRE(t30.points.size() == 1);
    CHECK(t30.points[0] == PtQ::affine(Rat(15), Rat(0)));

    // y^2 = x^3 - 729x + 729 is torsion-free
    TorsionGroup t27 = torsion_q(CurveQ::short_model(Rat(-729), Rat(729)));
    CHECK(t27.structure.empty());
    CHECK(t27.points.empty());

    // y^2 = x^3 - 4x has full 2-torsion
    TorsionGroup t4 = torsion_q(CurveQ::short_model(Rat(-4), Rat(0)));
    CHECK(t4.structure == std::vector<unsigned>({2, 2}));
    CHECK(t4.points.size() == 3);

    // y^2 = x^3 + 1 has a point of order 6: (2, 3)
    TorsionGroup t6 = torsion_q(CurveQ::short_model(Rat(0), Rat(1)));
    CHECK(t6.structure == std::vector<unsigned>({6}));
    CHECK(t6.points.size() == 5);
}

TEST_CASE("2-torsion over the function field") {
    CurveT none = CurveT::short_model(rf("-(t^2+27)"), rf("10*t^2+48*t+90"));
    CHECK(two_torsion_qt(none).empty());

    CurveT full = CurveT::short_model(rf("-t^2"), rf("0"));  // x(x-t)(x+t)
    std::vector<RatFn> roots = two_torsion_qt(full);
    REQUIRE(roots.size() == 3);
    std::vector<RatFn> want = {rf("-t"), rf("0"), rf("t")};
    for (const RatFn& w : want)
        CHECK(std::find(roots.begin(), roots.end(), w) != roots.end());

    CurveT running = CurveT::short_model(rf("-t^2"), rf("t^2"));
    CHECK(two_torsion_qt(running).empty());
}

TEST_CASE("specialization guards") {
    CurveT e = CurveT::short_model(rf("-t^2"), rf("t^2"));
    CHECK_THROWS_AS(specialize(e, Rat(0)), singular_specialization);
    CurveQ e27 = specialize(e, Rat(27));
    CHECK(e27.p1 == -729);
    CHECK(e27.p2 == 729);
    CurveT pole = CurveT::short_model(rf("1/t"), rf("1"));
    CHECK_THROWS_AS(specialize(pole, Rat(0)), pole_error);
}
