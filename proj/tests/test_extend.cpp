#include "doctest.h"
#include "speccert/extend.hpp"
#include "speccert/parser.hpp"

#include <algorithm>

using namespace speccert;

namespace {
RatFn rf(const std::string& s, const std::string& v) { return parse_expr(s, v); }

CurveT running_curve() {
    return CurveT::short_model(rf("-t^2", "t"), rf("t^2", "t"));
}

Parametrization torsion_par(const CurveT& e) {
    return Parametrization::for_two_torsion(e, rf("1/(alpha-alpha^3)", "alpha"),
                                            rf("1/(1-alpha^2)", "alpha"));
}
}  // namespace

TEST_CASE("parametrization verification") {
    CurveT e = running_curve();
    CHECK(verify_parametrization(torsion_par(e)));

    // perturbing v breaks the substitution identity
    Parametrization bad = Parametrization::for_two_torsion(
        e, rf("1/(alpha-alpha^3)", "alpha"), rf("1/(1-alpha^3)", "alpha"));
    CHECK_FALSE(verify_parametrization(bad));

    // constant u is rejected even when the identity holds
    Parametrization cst = torsion_par(e);
    cst.u = RatFn(Rat(1));
    CHECK_FALSE(verify_parametrization(cst));
}

TEST_CASE("integral model clearing scale") {
    CurveT e = CurveT::short_model(rf("1/t", "t"), rf("1/t^2", "t"));
    auto [cleared, lambda] = integral_model(e);
    CHECK(lambda == rf("t", "t"));
    CHECK(cleared.p1 == rf("t^3", "t"));
    CHECK(cleared.p2 == rf("t^4", "t"));
    CHECK(cleared.p1.is_polynomial());
    // an already integral model is untouched
    auto [same, one] = integral_model(running_curve());
    CHECK(one == RatFn(Rat(1)));
    CHECK(same.p1 == rf("-t^2", "t"));
}

TEST_CASE("transfer and embedding commute with specialization") {
    CurveT e = running_curve();
    Parametrization par = torsion_par(e);
    TransferredModel m = transfer_model(e, par);
    PtT p = PtT::affine(rf("t", "t"), rf("t", "t"));
    PtT p_prime = embed_point(p, par, m);
    CHECK(on_curve(m.e_prime, p_prime));
    for (const Rat& a0 : {Rat(-3, 2), Rat(2), Rat(3)}) {
        Rat t0 = par.u.eval(a0);
        CHECK(specialize_pt(p_prime, a0) == specialize_pt(p, t0));
        CurveQ lhs = specialize(m.e_prime, a0);
        CurveQ rhs = specialize(e, t0);
        CHECK(lhs.p1 == rhs.p1);
        CHECK(lhs.p2 == rhs.p2);
    }
    // transport to the cleared model stays on the cleared model
    PtT p_dbl = to_dblprime(p_prime, m);
    CHECK(on_curve(m.e_dblprime, p_dbl));
}

TEST_CASE("fiber solving") {
    RatFn u5 = rf("1/(alpha-alpha^3)", "alpha");
    CHECK(solve_fiber(u5, Rat(8, 15)) == std::vector<Rat>({Rat(-3, 2)}));
    CHECK(solve_fiber(u5, Rat(1, 6)) == std::vector<Rat>({Rat(-2)}));
    RatFn u7 = rf("4*alpha^3*(alpha+2)/(alpha^2+2*alpha-1)^2", "alpha");
    std::vector<Rat> f27 = solve_fiber(u7, Rat(27));
    CHECK(std::find(f27.begin(), f27.end(), Rat(-3)) != f27.end());
    CHECK_THROWS(solve_fiber(RatFn(Rat(2)), Rat(2)));
}

TEST_CASE("composition identities") {
    RatFn f = rf("(t^2+1)/(t-2)", "t");
    CHECK(compose(f, RatFn(Poly::variable("t"))) == f);
    RatFn g = rf("1/(alpha-alpha^3)", "alpha");
    CHECK(compose(f, g) ==
          (compose(Poly::variable("t"), g) * compose(Poly::variable("t"), g) + RatFn(Rat(1))) /
              (compose(Poly::variable("t"), g) - RatFn(Rat(2))));
}

TEST_CASE("prop2 conditions reject detectable dependence") {
    CurveT e = running_curve();
    PtT p = PtT::affine(rf("t", "t"), rf("t", "t"));
    SubgroupGens gens;
    gens.points.emplace_back("P", p);
    gens.points.emplace_back("minusP", neg(e, p));
    CHECK_THROWS(check_prop2_conditions(e, gens, Rat(3)));
    SubgroupGens off;
    off.points.emplace_back("X", PtT::affine(rf("t", "t"), rf("t+1", "t")));
    CHECK_THROWS(check_prop2_conditions(e, off, Rat(3)));
}

TEST_CASE("prop2 transcript enumerates every nonempty subset once") {
    CurveT run = running_curve();
    SubgroupGens gens;
    gens.points.emplace_back("P", PtT::affine(rf("t", "t"), rf("t", "t")));
    gens.points.emplace_back("Q", PtT::affine(rf("0", "t"), rf("t", "t")));
    Prop2Transcript tr = check_prop2_conditions(run, gens, Rat(3));
    REQUIRE(tr.cond2.size() == 3);
    CHECK(tr.cond2[0].subset_name == "P");
    CHECK(tr.cond2[1].subset_name == "Q");
    CHECK(tr.cond2[2].subset_name == "P+Q");
    for (const Prop2SubsetCheck& s : tr.cond2) CHECK(s.mask >= 1);
}

TEST_CASE("prop5 pipeline rejects curves with rational 2-torsion") {
    CurveT full = CurveT::short_model(rf("-t^2", "t"), rf("0", "t"));
    Parametrization par = torsion_par(running_curve());
    CHECK_THROWS(pipeline_prop5(full, par, Rat(2)));
}

TEST_CASE("prop7 pipeline rejects a non-dividing target") {
    CurveT e = running_curve();
    PtT p = PtT::affine(rf("t", "t"), rf("t", "t"));
    BiPoly wrong = parse_bipoly("a^2+t", "t", "a");
    RatFn u = rf("4*alpha^3*(alpha+2)/(alpha^2+2*alpha-1)^2", "alpha");
    RatFn v = rf("4*alpha^2*(alpha+2)/(alpha^2+2*alpha-1)^2", "alpha");
    Parametrization par = Parametrization::for_division_curve(wrong, u, v);
    PtT r = PtT::affine(v, rf("4*alpha^3*(alpha+2)*(alpha^2-3)/(alpha^2+2*alpha-1)^3",
                              "alpha"));
    CHECK_THROWS(pipeline_prop7(e, p, wrong, par, r, {}, Rat(-3)));
}
