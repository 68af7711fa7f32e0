#ifndef SPECCERT_CURVE_HPP
#define SPECCERT_CURVE_HPP

// Weierstrass curves and points over an exact field F (Q or Q(t)/Q(alpha)).
// Two models only: Short y^2 = x^3 + Ax + B and Isogeny y^2 = x^3 + ax^2 + bx.

#include "speccert/bipoly.hpp"

#include <array>
#include <vector>

namespace speccert {

inline bool field_zero(const Rat& q) { return sgn(q) == 0; }
inline bool field_zero(const RatFn& f) { return f.is_zero(); }

enum class CurveModel { Short, Isogeny };

template <typename F>
struct Curve {
    CurveModel model = CurveModel::Short;
    F p1{};  // A (Short) or a (Isogeny)
    F p2{};  // B (Short) or b (Isogeny)

    static Curve short_model(F A, F B) { return {CurveModel::Short, std::move(A), std::move(B)}; }
    static Curve isogeny_model(F a, F b) { return {CurveModel::Isogeny, std::move(a), std::move(b)}; }

    // y^2 = x^3 + c2 x^2 + c4 x + c6
    std::array<F, 3> cubic() const {
        if (model == CurveModel::Short) return {F(0), p1, p2};
        return {p1, p2, F(0)};
    }
};

template <typename F>
struct Pt {
    bool inf = true;
    F x{}, y{};

    static Pt infinity() { return Pt{}; }
    static Pt affine(F x, F y) { return Pt{false, std::move(x), std::move(y)}; }

    bool operator==(const Pt& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
};

template <typename F>
F rhs_at(const Curve<F>& e, const F& x) {
    auto [c2, c4, c6] = e.cubic();
    return ((x + c2) * x + c4) * x + c6;
}

template <typename F>
F discriminant(const Curve<F>& e) {
    if (e.model == CurveModel::Short) {
        const F& a = e.p1;
        const F& b = e.p2;
        return F(-16) * (F(4) * a * a * a + F(27) * b * b);
    }
    const F& a = e.p1;
    const F& b = e.p2;
    return F(16) * b * b * (a * a - F(4) * b);
}

template <typename F>
F discriminant_over_16(const Curve<F>& e) {
    return discriminant(e) / F(16);
}

template <typename F>
bool on_curve(const Curve<F>& e, const Pt<F>& p) {
    if (p.inf) return true;
    return p.y * p.y == rhs_at(e, p.x);
}

template <typename F>
Pt<F> neg(const Curve<F>&, const Pt<F>& p) {
    if (p.inf) return p;
    return Pt<F>::affine(p.x, F(0) - p.y);
}

template <typename F>
Pt<F> add(const Curve<F>& e, const Pt<F>& p, const Pt<F>& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    auto [c2, c4, c6] = e.cubic();
    (void)c6;
    F lambda;
    if (p.x == q.x) {
        if (field_zero(p.y + q.y)) return Pt<F>::infinity();
        // tangent
        lambda = (F(3) * p.x * p.x + F(2) * c2 * p.x + c4) / (F(2) * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    F x3 = lambda * lambda - c2 - p.x - q.x;
    F y3 = lambda * (p.x - x3) - p.y;
    return Pt<F>::affine(std::move(x3), std::move(y3));
}

template <typename F>
Pt<F> dbl(const Curve<F>& e, const Pt<F>& p) {
    return add(e, p, p);
}

template <typename F>
Pt<F> smul(const Curve<F>& e, Int n, const Pt<F>& p) {
    Pt<F> q = p;
    if (sgn(n) < 0) {
        q = neg(e, q);
        n = -n;
    }
    Pt<F> r = Pt<F>::infinity();
    while (sgn(n) > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = add(e, r, q);
        q = dbl(e, q);
        n >>= 1;
    }
    return r;
}

// Move the 2-torsion point T = (x2, 0) to the origin: x -> x + x2 gives
// y^2 = x^3 + a x^2 + b x with a = 3 x2, b = 3 x2^2 + A. The discriminant
// is unchanged. The record keeps x2 for point transport.
template <typename F>
struct IsogenyShift {
    Curve<F> curve;
    F x2;

    Pt<F> transport(const Pt<F>& p) const {
        if (p.inf) return p;
        return Pt<F>::affine(p.x - x2, p.y);
    }
};

template <typename F>
IsogenyShift<F> shift_to_isogeny_form(const Curve<F>& e, const Pt<F>& t) {
    if (e.model != CurveModel::Short)
        throw std::invalid_argument("shift_to_isogeny_form: expected Short model");
    if (t.inf || !field_zero(t.y) || !on_curve(e, t))
        throw std::invalid_argument("shift_to_isogeny_form: T is not a 2-torsion point");
    F a = F(3) * t.x;
    F b = F(3) * t.x * t.x + e.p1;
    return IsogenyShift<F>{Curve<F>::isogeny_model(std::move(a), std::move(b)), t.x};
}

using CurveQ = Curve<Rat>;
using PtQ = Pt<Rat>;
using CurveT = Curve<RatFn>;
using PtT = Pt<RatFn>;

// 2-division quartic of P: the monic degree-4 polynomial in x (variable
// name "x") whose roots are the x-coordinates of points R with 2R = P.
// Requires P affine with y_P != 0. Works for both models over Q.
Poly two_division_quartic(const CurveQ& e, const PtQ& p);

// Same quartic over Q(t) for a Short-model curve, as a polynomial in x
// with Q(t) coefficients (d_{2,P}(t,x) before clearing denominators).
BiPolyR two_division_poly(const CurveT& e, const PtT& p);

// All R in E(Q) with 2R = P, verified by exact doubling. Empty list
// certifies P is not in 2E(Q).
std::vector<PtQ> halve_q(const CurveQ& e, const PtQ& p);

// Same, but tolerates 2-torsion P (used on specialized subset sums which
// may land on 2-torsion).
std::vector<PtQ> halve_points_unchecked(const CurveQ& e, const PtQ& p);

// Roots in Q(t) of a monic polynomial in x with integer Z[t] coefficients
// (such roots are integer polynomials dividing the constant coefficient).
// Returns an empty list without searching when the input is not monic
// with integer coefficients.
std::vector<Poly> monic_bipoly_qt_roots(const BiPoly& f);

struct TorsionGroup {
    std::vector<unsigned> structure;  // cyclic orders: {} trivial, {n}, {2, 2m}
    std::vector<PtQ> generators;
    std::vector<PtQ> points;          // all torsion points, identity excluded
};

// Full torsion subgroup over Q via Nagell-Lutz on an integral model.
TorsionGroup torsion_q(const CurveQ& e);

// All roots in Q(t) of x^3 + A x + B for a Short-model curve with
// polynomial integral coefficients. Roots of a monic integral cubic are
// polynomial divisors of B, found by exhaustive divisor candidates.
std::vector<RatFn> two_torsion_qt(const CurveT& e);

// Coefficient-wise specialization at t0. Throws singular_specialization
// if the discriminant vanishes, pole_error if undefined.
struct singular_specialization : std::domain_error {
    explicit singular_specialization(const std::string& what)
        : std::domain_error(what) {}
};

CurveQ specialize(const CurveT& e, const Rat& t0);
PtQ specialize_pt(const PtT& p, const Rat& t0);

}  // namespace speccert

#endif
