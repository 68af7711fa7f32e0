#include "speccert/fixtures.hpp"

#include "speccert/jobfile.hpp"
#include "speccert/parser.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace speccert {

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

RatFn rf(const std::string& s, const std::string& var) { return parse_expr(s, var); }

CurveT running_curve() {
    return CurveT::short_model(rf("-t^2", "t"), rf("t^2", "t"));
}

Parametrization torsion_par(const CurveT& e) {
    return Parametrization::for_two_torsion(e, rf("1/(alpha-alpha^3)", "alpha"),
                                            rf("1/(1-alpha^2)", "alpha"));
}

struct Prop7Data {
    CurveT e;
    PtT p;
    BiPoly phi;
    Parametrization par;
    PtT r;
    std::vector<std::pair<std::string, PtT>> extra;
};

Prop7Data prop7_data() {
    Prop7Data d;
    d.e = running_curve();
    d.p = PtT::affine(rf("t", "t"), rf("t", "t"));
    d.phi = parse_bipoly("a^4+2*t^2*a^2-8*t^2*a+t^4-t*(4*a^3-4*t^2*a+4*t^2)", "t", "a");
    RatFn u = rf("4*alpha^3*(alpha+2)/(alpha^2+2*alpha-1)^2", "alpha");
    RatFn v = rf("4*alpha^2*(alpha+2)/(alpha^2+2*alpha-1)^2", "alpha");
    d.par = Parametrization::for_division_curve(d.phi, u, v);
    d.r = PtT::affine(v, rf("4*alpha^3*(alpha+2)*(alpha^2-3)/(alpha^2+2*alpha-1)^3",
                            "alpha"));
    d.extra.emplace_back("Q", PtT::affine(rf("0", "t"), rf("t", "t")));
    return d;
}

std::string pts(const PtQ& p) {
    if (p.inf) return "O";
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

// --- fixtures -------------------------------------------------------------

Check fx_prop9_injective() {
    Check c;
    CurveT e = running_curve();
    InjectivityCertificate cert = pipeline_prop5(e, torsion_par(e), Rat(-3, 2));
    c.expect(cert.injective, "expected Injective at alpha0 = -3/2");
    c.expect(cert.t0 == Rat(8, 15), "expected t0 = 8/15, got " + rat_to_string(cert.t0));
    c.expect(cert.criterion.sides.size() == 2, "expected two isogeny-side checks");
    std::vector<Rat> want = {Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(11, 4), Rat(23, 4)};
    for (const auto& [name, side] : cert.criterion.sides) {
        c.expect(side.checks.size() == 63,
                 name + ": expected 63 product checks, got " +
                     std::to_string(side.checks.size()));
        for (const ProductCheck& pc : side.checks)
            c.expect(!pc.square, name + ": product claimed square");
        std::vector<Rat> got;
        for (size_t i = 0; i < side.gen_values.size(); ++i) {
            if (side.gen_names[i] == "-1") continue;
            got.push_back(abs(side.gen_values[i]));
        }
        std::sort(got.begin(), got.end());
        c.expect(got == want, name + ": generator values differ from expected");
    }
    return c;
}

Check fx_prop9_witness() {
    Check c;
    CurveT e = running_curve();
    InjectivityCertificate cert = pipeline_prop5(e, torsion_par(e), Rat(-2));
    c.expect(!cert.injective, "expected Indeterminate at alpha0 = -2");
    c.expect(cert.t0 == Rat(1, 6), "expected t0 = 1/6, got " + rat_to_string(cert.t0));
    bool found = false;
    for (const auto& [name, side] : cert.criterion.sides) {
        (void)name;
        if (side.verdict != Verdict::Fails) continue;
        found = true;
        c.expect(side.witness_value == 1,
                 "witness product should evaluate to 1, got " +
                     rat_to_string(side.witness_value));
        std::vector<std::string> names;
        for (size_t i = 0; i < side.gen_names.size(); ++i)
            if (side.witness_mask & (uint64_t{1} << i)) names.push_back(side.gen_names[i]);
        std::sort(names.begin(), names.end());
        c.expect(names == std::vector<std::string>({"-1", "alpha+1"}),
                 "witness class should be -(alpha+1)");
        break;
    }
    c.expect(found, "no failing side recorded");
    return c;
}

Check fx_prop9_model() {
    Check c;
    CurveT e = running_curve();
    TransferredModel m = transfer_model(e, torsion_par(e));
    c.expect(m.e_dblprime.p1 == rf("-(alpha-alpha^3)^2", "alpha"),
             "cleared model A coefficient mismatch");
    c.expect(m.e_dblprime.p2 == rf("(alpha-alpha^3)^4", "alpha"),
             "cleared model B coefficient mismatch");
    FactorBase base = base_from_discriminant(m.e_dblprime);
    c.expect(base.size() == 6, "expected 6 base generators, got " +
                                   std::to_string(base.size()));
    bool has_minus_one = false;
    for (const Generator& g : base.gens)
        if (g.kind == Generator::Kind::MinusOne) has_minus_one = true;
    c.expect(has_minus_one, "-1 missing from the factor base");
    for (const char* s : {"alpha", "alpha-1", "alpha+1", "3*alpha^2-4", "3*alpha^2-1"}) {
        Poly want = rf(s, "alpha").num();
        bool present = false;
        for (const Generator& g : base.gens)
            if (g.kind == Generator::Kind::Polynomial && g.poly == want) present = true;
        c.expect(present, std::string("factor ") + s + " missing from the base");
    }
    c.expect(!m.two_torsion.inf && m.two_torsion.y.is_zero(),
             "2-torsion point malformed");
    c.expect(m.two_torsion.x == rf("alpha^2-alpha^4", "alpha"),
             "2-torsion x-coordinate mismatch");
    c.expect(rhs_at(m.e_dblprime, m.two_torsion.x).is_zero(),
             "2-torsion x-coordinate is not a root of the cubic");
    return c;
}

Check fx_example5_doubling() {
    Check c;
    CurveQ e = CurveQ::short_model(Rat(-729), Rat(729));
    PtQ half = PtQ::affine(Rat(-9), Rat(81));
    PtQ p = PtQ::affine(Rat(27), Rat(27));
    c.expect(dbl(e, half) == p, "[2](-9,81) != (27,27)");
    std::vector<PtQ> halves = halve_q(e, p);
    c.expect(halves.size() == 1 && halves[0] == half,
             "halving (27,27) should give exactly (-9,81)");
    return c;
}

Check fx_prop7_injective() {
    Check c;
    Prop7Data d = prop7_data();
    InjectivityCertificate cert =
        pipeline_prop7(d.e, d.p, d.phi, d.par, d.r, d.extra, Rat(-3));
    c.expect(cert.injective, "expected Injective at alpha0 = -3: " +
                                 cert.indeterminate_reason);
    c.expect(cert.t0 == 27, "expected t0 = 27, got " + rat_to_string(cert.t0));
    c.expect(cert.prop2.cond2.size() == 3, "expected 3 subset checks");
    for (const Prop2SubsetCheck& s : cert.prop2.cond2)
        c.expect(s.ok, "subset " + s.subset_name + " failed: specializes to " +
                           pts(s.specialized));
    c.expect(cert.prop2.generic_two_torsion.empty(),
             "E' should have no rational 2-torsion over the function field");
    c.expect(cert.prop2.special_two_torsion.empty(),
             "specialized curve should have no rational 2-torsion");
    return c;
}

Check fx_remark10_witness() {
    Check c;
    Prop7Data d = prop7_data();
    InjectivityCertificate cert =
        pipeline_prop7(d.e, d.p, d.phi, d.par, d.r, d.extra, Rat(-1));
    c.expect(!cert.injective, "expected Indeterminate at alpha0 = -1");
    c.expect(cert.t0 == -1, "expected t0 = -1, got " + rat_to_string(cert.t0));
    bool found = false;
    for (const Prop2SubsetCheck& s : cert.prop2.cond2) {
        if (s.subset_name != "R'+Q'") continue;
        found = true;
        c.expect(!s.ok, "R'+Q' should be divisible by 2 at alpha0 = -1");
        bool witness = false;
        for (const PtQ& h : s.halves)
            if (h == PtQ::affine(Rat(1), Rat(1))) witness = true;
        c.expect(witness, "expected halving witness (1,1)");
    }
    c.expect(found, "subset R'+Q' not in the transcript");
    return c;
}

Check fx_example3_transcript() {
    Check c;
    CurveT e = CurveT::short_model(rf("-(t^2+27)", "t"), rf("10*t^2+48*t+90", "t"));
    SubgroupGens gens;
    gens.independence_asserted = true;
    gens.points.emplace_back("P1", PtT::affine(rf("9", "t"), rf("t+24", "t")));
    gens.points.emplace_back("P2", PtT::affine(rf("6", "t"), rf("2*t+12", "t")));
    gens.points.emplace_back("P3", PtT::affine(rf("1", "t"), rf("3*t+8", "t")));
    gens.points.emplace_back("P4", PtT::affine(rf("t+3", "t"), rf("4*t+6", "t")));
    Prop2Transcript tr = check_prop2_conditions(e, gens, Rat(30));
    c.expect(tr.cond2.size() == 15, "expected 15 subset sums");
    c.expect(tr.cond2_ok, "all 15 subset specializations should be 2-indivisible");
    c.expect(!tr.cond3_ok, "2-torsion condition should fail at t0 = 30");
    bool witness = std::find(tr.special_two_torsion.begin(), tr.special_two_torsion.end(),
                             Rat(15)) != tr.special_two_torsion.end();
    c.expect(witness, "expected the 2-torsion witness x = 15 on the specialized curve");
    c.expect(!tr.injective, "verdict should be Indeterminate");
    return c;
}

Check fx_example4_witness() {
    Check c;
    CurveQ e = CurveQ::short_model(Rat(-4), Rat(4));
    std::vector<PtQ> halves = halve_q(e, PtQ::affine(Rat(0), Rat(2)));
    c.expect(halves.size() == 1 && halves[0] == PtQ::affine(Rat(2), Rat(2)),
             "halving (0,2) should give exactly (2,2)");
    return c;
}

Check fx_pair_reduction() {
    Check c;
    Poly t = Poly::variable("t");
    Poly zero;
    std::vector<FactorBase> bases;
    bases.push_back(build_base_2descent(zero, t, -t));
    bases.push_back(build_base_2descent(zero, Poly::constant(1), t));
    {
        auto [g_phi, g_phihat] =
            build_base_2isogeny(t, rf("t^2-4", "t").num());
        bases.push_back(g_phi);
        bases.push_back(g_phihat);
    }
    {
        auto [g_phi, g_phihat] =
            build_base_2isogeny(rf("t+1", "t").num(), rf("2*t", "t").num());
        bases.push_back(g_phi);
        bases.push_back(g_phihat);
    }
    for (const FactorBase& base : bases) {
        c.expect(base.size() <= 4, "fixture base larger than intended: " + base.render());
        for (long n = -6; n <= 6; ++n) {
            Rat t0(n, 2);
            std::vector<Rat> values;
            bool vanish = false;
            for (const Generator& g : base.gens) {
                Rat v = g.eval(t0);
                if (sgn(v) == 0) vanish = true;
                values.push_back(v);
            }
            if (vanish) continue;  // both formulations are indeterminate here
            auto prod = [&](uint64_t mask) {
                Rat r(1);
                for (size_t i = 0; i < values.size(); ++i)
                    if (mask & (uint64_t{1} << i)) r *= values[i];
                return r;
            };
            // literal pair enumeration: every nonidentity pair must have a
            // nonsquare entry (the empty product counts as the square 1)
            uint64_t m = uint64_t{1} << base.size();
            bool pair_holds = true;
            for (uint64_t m1 = 0; m1 < m && pair_holds; ++m1) {
                for (uint64_t m2 = 0; m2 < m; ++m2) {
                    if (m1 == 0 && m2 == 0) continue;
                    if (is_square(prod(m1)) && is_square(prod(m2))) {
                        pair_holds = false;
                        break;
                    }
                }
            }
            bool single_holds = check_base(base, t0).verdict == Verdict::Holds;
            c.expect(single_holds == pair_holds,
                     "single-base and pair formulations disagree on " + base.render() +
                         " at t0 = " + rat_to_string(t0));
        }
    }
    return c;
}

Check fx_property_suites() {
    Check c;
    uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 11;
    };
    auto rnd = [&](long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    };

    // group-law axioms on the fixture curves
    struct GL {
        CurveQ e;
        std::vector<PtQ> gens;
    };
    std::vector<GL> curves = {
        {CurveQ::short_model(Rat(-729), Rat(729)),
         {PtQ::affine(Rat(-9), Rat(81)), PtQ::affine(Rat(-27), Rat(27))}},
        {CurveQ::short_model(Rat(-4), Rat(4)),
         {PtQ::affine(Rat(2), Rat(2)), PtQ::affine(Rat(0), Rat(2))}},
        {CurveQ::short_model(Rat(-927), Rat(10530)),
         {PtQ::affine(Rat(9), Rat(54)), PtQ::affine(Rat(6), Rat(72)),
          PtQ::affine(Rat(1), Rat(98)), PtQ::affine(Rat(33), Rat(126))}},
    };
    for (const GL& fix : curves) {
        for (const PtQ& g : fix.gens)
            c.expect(on_curve(fix.e, g), "fixture generator off its curve");
        auto random_point = [&]() {
            PtQ p = PtQ::infinity();
            for (const PtQ& g : fix.gens) p = add(fix.e, p, smul(fix.e, rnd(-3, 3), g));
            return p;
        };
        for (int i = 0; i < 100; ++i) {
            PtQ p = random_point(), q = random_point(), r = random_point();
            c.expect(on_curve(fix.e, p), "random point off curve");
            c.expect(add(fix.e, add(fix.e, p, q), r) == add(fix.e, p, add(fix.e, q, r)),
                     "associativity failed");
            c.expect(add(fix.e, p, q) == add(fix.e, q, p), "commutativity failed");
            c.expect(add(fix.e, p, neg(fix.e, p)).inf, "inverse failed");
        }
    }

    // factorization round-trip
    for (int i = 0; i < 200; ++i) {
        int deg = 1 + static_cast<int>(next() % 10);
        std::vector<Rat> cs(deg + 1);
        for (int j = 0; j <= deg; ++j) cs[j] = Rat(rnd(-1000, 1000));
        if (sgn(cs[deg]) == 0) cs[deg] = 1;
        Poly p("t", cs);
        PolyFactorization pf = factor_z(p);
        c.expect(pf.reconstruct() == p, "factorization does not reconstruct input");
    }

    // is_square scaling invariance
    for (int i = 0; i < 1000; ++i) {
        Rat q(rnd(-1000000, 1000000), rnd(1, 10000));
        q.canonicalize();
        Rat s(rnd(-10000, 10000), rnd(1, 1000));
        if (sgn(s) == 0) s = 1;
        s.canonicalize();
        c.expect(is_square(q * s * s) == is_square(q), "is_square not scale invariant");
    }

    // certificate determinism and replay
    const std::string jobtext =
        "[curve]\n"
        "field = Q(t)\n"
        "model = short\n"
        "A = \"-t^2\"\n"
        "B = \"t^2\"\n"
        "\n"
        "[parametrization]\n"
        "u = \"1/(alpha-alpha^3)\"\n"
        "v = \"1/(1-alpha^2)\"\n"
        "target = two-torsion\n"
        "\n"
        "[job]\n"
        "route = prop5\n"
        "alpha0 = -3/2, -2\n";
    RunResult first = run_job(parse_jobfile(jobtext));
    c.expect(first.exit_code == 2, "prop5 batch should exit 2 (one Indeterminate)");
    for (int i = 0; i < 2; ++i) {
        RunResult again = run_job(parse_jobfile(jobtext));
        c.expect(again.output == first.output, "certificate output not byte-identical");
    }
    std::string why;
    c.expect(replay_certificate(first.output, &why), "replay failed: " + why);
    return c;
}

}  // namespace

std::vector<FixtureResult> run_fixtures(const std::string& filter) {
    struct Entry {
        int number;
        const char* name;
        std::function<Check()> fn;
    };
    const std::vector<Entry> entries = {
        {1, "prop9-injective", fx_prop9_injective},
        {2, "prop9-witness", fx_prop9_witness},
        {3, "prop9-model", fx_prop9_model},
        {4, "example5-doubling", fx_example5_doubling},
        {5, "prop7-injective", fx_prop7_injective},
        {6, "remark10-witness", fx_remark10_witness},
        {7, "example3-transcript", fx_example3_transcript},
        {8, "example4-witness", fx_example4_witness},
        {9, "descent-pair-reduction", fx_pair_reduction},
        {10, "property-suites", fx_property_suites},
    };
    std::vector<FixtureResult> out;
    for (const Entry& e : entries) {
        if (!filter.empty() && std::string(e.name).find(filter) == std::string::npos)
            continue;
        FixtureResult r;
        r.number = e.number;
        r.name = e.name;
        try {
            Check c = e.fn();
            r.pass = c.ok;
            r.detail = c.detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace speccert
