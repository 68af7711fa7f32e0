#ifndef SPECCERT_EXTEND_HPP
#define SPECCERT_EXTEND_HPP

// Transfer of a curve E/Q(t) to a parametrized model over Q(alpha) via a
// rational 2-torsion curve or 2-division curve, point embedding, fiber
// solving, and the per-specialization injectivity pipelines.

#include "speccert/descent.hpp"

namespace speccert {

struct Parametrization {
    RatFn u, v;     // functions of alpha
    BiPoly target;  // the plane curve target(t, a) = 0 that (u, v) must satisfy
    bool two_torsion_target = false;  // target is the 2-torsion cubic of E

    static Parametrization for_two_torsion(const CurveT& e, RatFn u, RatFn v);
    static Parametrization for_division_curve(BiPoly phi, RatFn u, RatFn v);
};

// True iff target(u(alpha), v(alpha)) is identically zero and u is
// nonconstant. Does not certify birationality of the parametrization.
bool verify_parametrization(const Parametrization& p);

struct TransferredModel {
    CurveT e_prime;      // E': coefficients composed with u (rational functions)
    CurveT e_dblprime;   // E'': cleared integral model, (x,y) -> (l^2 X, l^3 Y)
    RatFn lambda;        // the clearing scale l (a polynomial in alpha)
    PtT two_torsion;     // Prop 5 route: verified 2-torsion (l^2 v, 0) on E''
    PtT embedded_point;  // Prop 7 route: P' on E'
    PtT halving_point;   // Prop 7 route: R' on E' with 2R' = P'
};

// Minimal-degree monic clearing scale: smallest monic d with d^4 A and
// d^6 B polynomial. Returns the integral model and the scale.
std::pair<CurveT, RatFn> integral_model(const CurveT& e);

TransferredModel transfer_model(const CurveT& e, const Parametrization& p);

// P = (x(t), y(t)) -> P' = (x(u), y(u)) on E' (coordinates composed with u).
PtT embed_point(const PtT& p, const Parametrization& par, const TransferredModel& m);
// Transport from E' coordinates onto E'': (x, y) -> (l^2 x, l^3 y).
PtT to_dblprime(const PtT& p_prime, const TransferredModel& m);

// Verifies r on E' and 2r = P', then records it in the model.
void build_halving_point(TransferredModel& m, const PtT& r);

// All rational alpha0 with u(alpha0) = t0; empty means t0 is unreachable
// through this parametrization.
std::vector<Rat> solve_fiber(const RatFn& u, const Rat& t0);

struct SubgroupGens {
    std::vector<std::pair<std::string, PtT>> points;  // named, nonempty
    bool independence_asserted = false;
};

struct Prop2SubsetCheck {
    uint64_t mask;  // bit i selects generator i
    std::string subset_name;
    PtQ specialized;
    std::vector<PtQ> halves;  // nonempty => divisible by 2 => check fails
    bool ok;                  // specialized nonzero and not divisible by 2
};

struct Prop2Transcript {
    bool cond2_ok = false;
    std::vector<Prop2SubsetCheck> cond2;
    bool cond3_ok = false;
    std::vector<RatFn> generic_two_torsion;   // x-roots over the function field
    std::vector<Rat> special_two_torsion;     // x-roots of the specialized cubic
    bool injective = false;
    std::string failure;  // first failing check, empty if injective
    // conditions 1 and 4 are automatic (Mordell-Weil / formal groups)
};

// Conditions 2 and 3 of the group-theoretic injectivity criterion for the
// specialization of <gens> at t0, with n = 2.
Prop2Transcript check_prop2_conditions(const CurveT& e, const SubgroupGens& gens,
                                       const Rat& t0);

enum class Route { Descent2, Isogeny2, Prop5, Prop7, Prop2Check };

struct InjectivityCertificate {
    Route route;
    Rat t0;
    bool has_alpha0 = false;
    Rat alpha0;
    bool injective = false;  // false => Indeterminate (never "non-injective")
    std::string indeterminate_reason;
    CriterionReport criterion;   // descent routes
    Prop2Transcript prop2;       // prop7 / prop2check routes
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;  // human-readable evidence summary lines
};

// Prop 5 + 2-isogeny criterion via the discriminant factor base.
InjectivityCertificate pipeline_prop5(const CurveT& e, const Parametrization& p,
                                      const Rat& alpha0);

// Prop 7 + the group-theoretic conditions on M' = <R', extra generators>.
InjectivityCertificate pipeline_prop7(const CurveT& e, const PtT& p,
                                      const BiPoly& phi, const Parametrization& par,
                                      const PtT& r_expr,
                                      const std::vector<std::pair<std::string, PtT>>& extra_gens,
                                      const Rat& alpha0);

}  // namespace speccert

#endif
