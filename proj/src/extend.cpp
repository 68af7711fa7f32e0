#include "speccert/extend.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace speccert {

Parametrization Parametrization::for_two_torsion(const CurveT& e, RatFn u, RatFn v) {
    if (e.model != CurveModel::Short)
        throw std::invalid_argument("two-torsion parametrization requires Short model");
    BiPolyR cubic({e.p2, e.p1, RatFn(0L), RatFn(1L)});
    Parametrization p;
    p.u = std::move(u);
    p.v = std::move(v);
    p.target = cubic.clear_denominators().first;
    p.two_torsion_target = true;
    return p;
}

Parametrization Parametrization::for_division_curve(BiPoly phi, RatFn u, RatFn v) {
    Parametrization p;
    p.u = std::move(u);
    p.v = std::move(v);
    p.target = std::move(phi);
    p.two_torsion_target = false;
    return p;
}

bool verify_parametrization(const Parametrization& p) {
    if (p.target.is_zero())
        throw std::invalid_argument("verify_parametrization: zero target polynomial");
    if (p.u.is_constant()) return false;
    RatFn value = bipoly_substitute(p.target, p.u).eval_x(p.v);
    return value.is_zero();
}

std::pair<CurveT, RatFn> integral_model(const CurveT& e) {
    // exponent of each irreducible denominator factor, weighted by the
    // coefficient's scaling power (4 for A/a-slot, 6 for B/b-slot).
    unsigned w1 = e.model == CurveModel::Short ? 4 : 2;
    unsigned w2 = e.model == CurveModel::Short ? 6 : 4;
    struct Need {
        Poly factor;
        unsigned exp = 0;
    };
    std::vector<Need> needs;
    auto fold = [&](const Poly& den, unsigned weight) {
        if (den.degree() < 1) return;
        for (const auto& [f, ex] : factor_z(den).factors) {
            unsigned want = (ex + weight - 1) / weight;
            bool found = false;
            for (Need& n : needs) {
                if (n.factor == f) {
                    n.exp = std::max(n.exp, want);
                    found = true;
                }
            }
            if (!found) needs.push_back({f, want});
        }
    };
    fold(e.p1.den(), w1);
    fold(e.p2.den(), w2);
    Poly delta = Poly::constant(1);
    for (const Need& n : needs) delta = delta * n.factor.pow(n.exp);
    delta = delta.monic();
    RatFn lambda{delta};
    RatFn l2 = lambda * lambda;
    RatFn lw1 = l2, lw2 = l2 * l2;
    if (e.model == CurveModel::Short) {
        lw1 = l2 * l2;            // lambda^4
        lw2 = lw1 * l2;           // lambda^6
    }
    CurveT cleared{e.model, e.p1 * lw1, e.p2 * lw2};
    if (!cleared.p1.is_polynomial() || !cleared.p2.is_polynomial())
        throw std::logic_error("integral_model: clearing scale failed");
    return {cleared, lambda};
}

TransferredModel transfer_model(const CurveT& e, const Parametrization& p) {
    if (e.model != CurveModel::Short)
        throw std::invalid_argument("transfer_model: expected Short model");
    if (!verify_parametrization(p))
        throw std::invalid_argument(
            "transfer_model: parametrization does not satisfy its target curve");
    TransferredModel m;
    m.e_prime = CurveT::short_model(compose(e.p1, p.u), compose(e.p2, p.u));
    auto [cleared, lambda] = integral_model(m.e_prime);
    m.e_dblprime = cleared;
    m.lambda = lambda;
    if (p.two_torsion_target) {
        RatFn x2 = m.lambda * m.lambda * p.v;
        m.two_torsion = PtT::affine(x2, RatFn(0L));
        if (!on_curve(m.e_dblprime, m.two_torsion))
            throw std::logic_error(
                "transfer_model: transported 2-torsion point is off the cleared model");
    }
    return m;
}

PtT embed_point(const PtT& p, const Parametrization& par, const TransferredModel& m) {
    if (p.inf) return PtT::infinity();
    PtT q = PtT::affine(compose(p.x, par.u), compose(p.y, par.u));
    if (!on_curve(m.e_prime, q))
        throw std::invalid_argument("embed_point: image is off E'");
    return q;
}

PtT to_dblprime(const PtT& p_prime, const TransferredModel& m) {
    if (p_prime.inf) return p_prime;
    RatFn l2 = m.lambda * m.lambda;
    return PtT::affine(p_prime.x * l2, p_prime.y * l2 * m.lambda);
}

void build_halving_point(TransferredModel& m, const PtT& r) {
    if (r.inf) throw std::invalid_argument("build_halving_point: R' must be affine");
    if (!on_curve(m.e_prime, r))
        throw std::invalid_argument("build_halving_point: R' is off E'");
    if (m.embedded_point.inf)
        throw std::logic_error("build_halving_point: embed the base point first");
    if (!(dbl(m.e_prime, r) == m.embedded_point))
        throw std::invalid_argument("build_halving_point: 2R' != P'");
    m.halving_point = r;
}

std::vector<Rat> solve_fiber(const RatFn& u, const Rat& t0) {
    if (u.is_constant())
        throw std::invalid_argument("solve_fiber: u must be nonconstant");
    RatFn diff = u - RatFn(t0);
    return rational_roots(diff.num());
}

namespace {

std::string subset_label(uint64_t mask,
                         const std::vector<std::pair<std::string, PtT>>& gens) {
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (mask & (uint64_t{1} << i)) {
            if (!s.empty()) s += "+";
            s += gens[i].first;
        }
    }
    return s;
}

std::string pt_to_string(const PtQ& p) {
    if (p.inf) return "O";
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

}  // namespace

Prop2Transcript check_prop2_conditions(const CurveT& e, const SubgroupGens& gens,
                                       const Rat& t0) {
    if (gens.points.empty())
        throw std::invalid_argument("check_prop2_conditions: empty generator list");
    if (gens.points.size() > 16)
        throw std::invalid_argument("check_prop2_conditions: too many generators");
    for (const auto& [name, p] : gens.points) {
        if (p.inf || !on_curve(e, p))
            throw std::invalid_argument("generator " + name + " is not an affine point on the curve");
    }
    CurveQ special = specialize(e, t0);
    Prop2Transcript tr;

    // Condition 2: every nonempty subset sum specializes to a nonzero
    // point not divisible by 2.
    uint64_t total = (uint64_t{1} << gens.points.size()) - 1;
    tr.cond2_ok = true;
    for (uint64_t mask = 1; mask <= total; ++mask) {
        PtT sum = PtT::infinity();
        for (size_t i = 0; i < gens.points.size(); ++i) {
            if (mask & (uint64_t{1} << i)) sum = add(e, sum, gens.points[i].second);
        }
        if (sum.inf)
            throw std::invalid_argument(
                "generators are dependent over the function field (subset " +
                subset_label(mask, gens.points) + " sums to O)");
        Prop2SubsetCheck chk;
        chk.mask = mask;
        chk.subset_name = subset_label(mask, gens.points);
        bool pole = !sum.x.defined_at(t0) || !sum.y.defined_at(t0);
        if (pole) {
            chk.specialized = PtQ::infinity();
            chk.ok = false;
        } else {
            chk.specialized = specialize_pt(sum, t0);
            chk.halves = halve_points_unchecked(special, chk.specialized);
            chk.ok = chk.halves.empty();
        }
        if (!chk.ok && tr.failure.empty()) {
            if (chk.specialized.inf) {
                tr.failure = "(" + chk.subset_name + ")_t0 specializes to O";
            } else {
                tr.failure = "(" + chk.subset_name + ")_t0 = " +
                             pt_to_string(chk.specialized) + " is divisible by 2: " +
                             pt_to_string(chk.specialized) + " = [2]" +
                             pt_to_string(chk.halves.front());
            }
        }
        tr.cond2_ok = tr.cond2_ok && chk.ok;
        tr.cond2.push_back(std::move(chk));
    }

    // Condition 3: the rational 2-torsion of the generic fiber must
    // specialize bijectively onto that of the special fiber.
    auto [cleared, lambda] = integral_model(e);
    if (cleared.model != CurveModel::Short)
        throw std::invalid_argument("check_prop2_conditions: expected Short model");
    std::vector<RatFn> generic = two_torsion_qt(cleared);
    Rat l2 = lambda.eval(t0) * lambda.eval(t0);
    std::vector<Rat> generic_at_t0;
    for (const RatFn& r : generic) {
        tr.generic_two_torsion.push_back(r / (RatFn(lambda) * RatFn(lambda)));
        generic_at_t0.push_back(r.eval(t0) / l2);
    }
    std::sort(generic_at_t0.begin(), generic_at_t0.end());
    generic_at_t0.erase(std::unique(generic_at_t0.begin(), generic_at_t0.end()),
                        generic_at_t0.end());
    auto [c2, c4, c6] = special.cubic();
    tr.special_two_torsion = rational_roots(Poly("x", {c6, c4, c2, Rat(1)}));
    tr.cond3_ok = generic_at_t0 == tr.special_two_torsion &&
                  generic_at_t0.size() == generic.size();
    if (!tr.cond3_ok && tr.failure.empty()) {
        std::ostringstream os;
        os << "2-torsion mismatch: generic fiber has " << generic.size()
           << " rational 2-torsion x-coordinate(s), special fiber has "
           << tr.special_two_torsion.size();
        if (!tr.special_two_torsion.empty())
            os << " (witness x = " << rat_to_string(tr.special_two_torsion.front()) << ")";
        tr.failure = os.str();
    }

    tr.injective = tr.cond2_ok && tr.cond3_ok;
    return tr;
}

InjectivityCertificate pipeline_prop5(const CurveT& e, const Parametrization& p,
                                      const Rat& alpha0) {
    if (!p.two_torsion_target)
        throw std::invalid_argument("pipeline_prop5: expected a two-torsion parametrization");
    if (!verify_parametrization(p))
        throw std::invalid_argument("pipeline_prop5: parametrization check failed");
    auto [cleared, lam0] = integral_model(e);
    (void)lam0;
    if (!two_torsion_qt(cleared).empty())
        throw std::invalid_argument(
            "pipeline_prop5: curve already has Q(t)-rational 2-torsion; use the direct criteria");

    InjectivityCertificate cert;
    cert.route = Route::Prop5;
    cert.has_alpha0 = true;
    cert.alpha0 = alpha0;
    if (!p.u.defined_at(alpha0))
        throw std::invalid_argument("pipeline_prop5: alpha0 is a pole of u");
    cert.t0 = p.u.eval(alpha0);

    TransferredModel m = transfer_model(e, p);
    // Moving the 2-torsion point to the origin fixes the isogeny model and
    // leaves the discriminant unchanged, so the Delta/16 base serves both
    // isogeny-side groups.
    IsogenyShift<RatFn> shift = shift_to_isogeny_form(m.e_dblprime, m.two_torsion);
    (void)shift;
    FactorBase base = base_from_discriminant(m.e_dblprime);

    cert.criterion = check_criterion_2isogeny(base, base, alpha0);
    cert.injective = cert.criterion.verdict == Verdict::Holds;
    if (cert.criterion.verdict == Verdict::Indeterminate)
        cert.indeterminate_reason = cert.criterion.sides[0].second.reason.empty()
                                        ? cert.criterion.sides[1].second.reason
                                        : cert.criterion.sides[0].second.reason;
    else if (cert.criterion.verdict == Verdict::Fails) {
        for (const auto& [name, side] : cert.criterion.sides) {
            if (side.verdict == Verdict::Fails) {
                cert.indeterminate_reason =
                    name + " product evaluates to the square " +
                    rat_to_string(side.witness_value) + " at alpha0";
                break;
            }
        }
    }
    cert.assumptions.push_back("parametrization birationality assumed (substitution identity and nonconstancy verified)");
    cert.notes.push_back("E' : y^2 = x^3+(" + m.e_prime.p1.render() + ")*x+(" +
                         m.e_prime.p2.render() + ")");
    cert.notes.push_back("E'': Y^2 = X^3+(" + m.e_dblprime.p1.render() + ")*X+(" +
                         m.e_dblprime.p2.render() + "), scale " + m.lambda.render());
    cert.notes.push_back("2-torsion on E'': (" + m.two_torsion.x.render() + ", 0)");
    cert.notes.push_back("factor base " + base.render());
    return cert;
}

InjectivityCertificate pipeline_prop7(
    const CurveT& e, const PtT& p, const BiPoly& phi, const Parametrization& par,
    const PtT& r_expr, const std::vector<std::pair<std::string, PtT>>& extra_gens,
    const Rat& alpha0) {
    if (par.two_torsion_target)
        throw std::invalid_argument("pipeline_prop7: expected a division-curve parametrization");
    if (p.inf || !on_curve(e, p))
        throw std::invalid_argument("pipeline_prop7: P must be an affine point on E");
    BiPolyR d2 = two_division_poly(e, p);
    if (!bipoly_divrem_rem(d2, to_bipolyr(phi)).is_zero())
        throw std::invalid_argument("pipeline_prop7: phi does not divide d_{2,P}");
    if (!verify_parametrization(par))
        throw std::invalid_argument("pipeline_prop7: parametrization check failed");

    // Spot-check that P is not already divisible by 2 over Q(t): the
    // quartic must have no root in Q(t).
    {
        auto [cleared_d2, mult] = d2.clear_denominators();
        (void)mult;
        if (!monic_bipoly_qt_roots(cleared_d2).empty())
            throw std::invalid_argument(
                "pipeline_prop7: P is divisible by 2 over Q(t); Prop 7 does not apply");
    }

    InjectivityCertificate cert;
    cert.route = Route::Prop7;
    cert.has_alpha0 = true;
    cert.alpha0 = alpha0;
    if (!par.u.defined_at(alpha0))
        throw std::invalid_argument("pipeline_prop7: alpha0 is a pole of u");
    cert.t0 = par.u.eval(alpha0);

    TransferredModel m = transfer_model(e, par);
    m.embedded_point = embed_point(p, par, m);
    build_halving_point(m, r_expr);

    SubgroupGens gens;
    gens.independence_asserted = true;
    gens.points.emplace_back("R'", m.halving_point);
    for (const auto& [name, g] : extra_gens) {
        gens.points.emplace_back(name + "'", embed_point(g, par, m));
    }
    cert.prop2 = check_prop2_conditions(m.e_prime, gens, alpha0);
    cert.injective = cert.prop2.injective;
    if (!cert.injective) cert.indeterminate_reason = cert.prop2.failure;

    cert.assumptions.push_back("parametrization birationality assumed (substitution identity and nonconstancy verified)");
    cert.assumptions.push_back("generator independence asserted by input");
    cert.notes.push_back("E' : y^2 = x^3+(" + m.e_prime.p1.render() + ")*x+(" +
                         m.e_prime.p2.render() + ")");
    cert.notes.push_back("P' = (" + m.embedded_point.x.render() + ", " +
                         m.embedded_point.y.render() + ")");
    cert.notes.push_back("R' = (" + m.halving_point.x.render() + ", " +
                         m.halving_point.y.render() + ") with [2]R' = P' verified");
    return cert;
}

}  // namespace speccert
