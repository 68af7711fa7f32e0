#include "speccert/curve.hpp"

#include "speccert/factorize.hpp"

#include <algorithm>

namespace speccert {

namespace {

// d_{2,P}(x) = (3x^2 + 2 c2 x + c4)^2 - 4 (x_P + c2 + 2x)(x^3 + c2 x^2 + c4 x + c6),
// monic quartic vanishing exactly at x(R) with x(2R) = x_P.
template <typename F>
std::array<F, 5> halving_quartic_coeffs(const Curve<F>& e, const F& xp) {
    auto [c2, c4, c6] = e.cubic();
    std::array<F, 5> d{};
    // (3x^2 + 2 c2 x + c4)^2
    d[4] = F(9);
    d[3] = F(12) * c2;
    d[2] = F(6) * c4 + F(4) * c2 * c2;
    d[1] = F(4) * c2 * c4;
    d[0] = c4 * c4;
    // minus 4 (2x + xp + c2)(x^3 + c2 x^2 + c4 x + c6)
    F s = xp + c2;
    d[4] = d[4] - F(8);
    d[3] = d[3] - F(8) * c2 - F(4) * s;
    d[2] = d[2] - F(8) * c4 - F(4) * s * c2;
    d[1] = d[1] - F(8) * c6 - F(4) * s * c4;
    d[0] = d[0] - F(4) * s * c6;
    return d;
}

}  // namespace

Poly two_division_quartic(const CurveQ& e, const PtQ& p) {
    if (p.inf) throw std::invalid_argument("two_division_quartic: P is the identity");
    if (sgn(p.y) == 0)
        throw std::invalid_argument("two_division_quartic: P is 2-torsion");
    auto d = halving_quartic_coeffs(e, p.x);
    std::vector<Rat> c(d.begin(), d.end());
    return Poly("x", std::move(c));  // monic: leading coefficient 9 - 8 = 1
}

BiPolyR two_division_poly(const CurveT& e, const PtT& p) {
    if (e.model != CurveModel::Short)
        throw std::invalid_argument("two_division_poly: expected Short model");
    if (p.inf) throw std::invalid_argument("two_division_poly: P is the identity");
    if (p.y.is_zero())
        throw std::invalid_argument("two_division_poly: P is 2-torsion");
    auto d = halving_quartic_coeffs(e, p.x);
    std::vector<RatFn> c(d.begin(), d.end());
    return BiPolyR(std::move(c));
}

std::vector<PtQ> halve_q(const CurveQ& e, const PtQ& p) {
    if (p.inf) throw std::invalid_argument("halve_q: P is the identity");
    if (sgn(p.y) == 0) throw std::invalid_argument("halve_q: P is 2-torsion");
    return halve_points_unchecked(e, p);
}

std::vector<PtQ> halve_points_unchecked(const CurveQ& e, const PtQ& p) {
    if (p.inf) throw std::invalid_argument("halve: P is the identity");
    auto d = halving_quartic_coeffs(e, p.x);
    Poly quartic("x", std::vector<Rat>(d.begin(), d.end()));
    std::vector<PtQ> out;
    for (const Rat& x0 : rational_roots(quartic)) {
        Rat y2 = rhs_at(e, x0);
        if (!is_square(y2)) continue;
        Rat y0(isqrt(y2.get_num()).root, isqrt(y2.get_den()).root);
        y0.canonicalize();
        for (int s = 0; s < 2; ++s) {
            PtQ r = PtQ::affine(x0, s == 0 ? y0 : -y0);
            if (dbl(e, r) == p) out.push_back(r);
            if (sgn(y0) == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const PtQ& a, const PtQ& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    });
    return out;
}

namespace {

// Smallest positive u with u^(w1) * c1 and u^(w2) * c2 integral.
Int integral_scale(const Rat& c1, const Rat& c2, unsigned w1, unsigned w2) {
    Int u = 1;
    auto fold = [&](const Int& den, unsigned w) {
        for (const auto& [q, e] : factor_int(den).primes) {
            unsigned need = (e + w - 1) / w;
            Int qk = 1;
            for (unsigned i = 0; i < need; ++i) qk *= q;
            // take lcm on this prime
            Int cur = 1;
            Int uu = u;
            while (uu % q == 0) {
                cur *= q;
                uu /= q;
            }
            if (cur < qk) u = u / cur * qk;
        }
    };
    if (c1.get_den() != 1) fold(c1.get_den(), w1);
    if (c2.get_den() != 1) fold(c2.get_den(), w2);
    return u;
}

Int ipow(const Int& b, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

unsigned point_order(const CurveQ& e, const PtQ& p, unsigned bound) {
    PtQ q = p;
    for (unsigned n = 1; n <= bound; ++n) {
        if (q.inf) return n;
        q = add(e, q, p);
    }
    return 0;  // not torsion within the bound
}

}  // namespace

TorsionGroup torsion_q(const CurveQ& e) {
    // Admissible change (x,y) -> (u^2 x, u^3 y) to an integral model.
    CurveQ ie = e;
    Int u;
    if (e.model == CurveModel::Short) {
        u = integral_scale(e.p1, e.p2, 4, 6);
        ie.p1 = e.p1 * Rat(ipow(u, 4));
        ie.p2 = e.p2 * Rat(ipow(u, 6));
    } else {
        u = integral_scale(e.p1, e.p2, 2, 4);
        ie.p1 = e.p1 * Rat(ipow(u, 2));
        ie.p2 = e.p2 * Rat(ipow(u, 4));
    }
    Rat disc = discriminant(ie);
    if (sgn(disc) == 0) throw std::invalid_argument("torsion_q: singular curve");

    // Nagell-Lutz: integral torsion points have y = 0 or y^2 | disc.
    std::vector<Int> ys{0};
    Int d_abs = abs(disc.get_num());
    for (const Int& y : divisors(d_abs)) {
        if (d_abs % (y * y) == 0) ys.push_back(y);
    }
    auto [c2, c4, c6] = ie.cubic();
    std::vector<PtQ> torsion;
    for (const Int& y : ys) {
        Poly cubic("x", {c6 - Rat(y * y), c4, c2, Rat(1)});
        for (const Rat& x : rational_roots(cubic)) {
            if (x.get_den() != 1) continue;  // Nagell-Lutz: integral coordinates
            for (int s = 0; s < 2; ++s) {
                PtQ p = PtQ::affine(x, Rat(s == 0 ? y : -y));
                unsigned order = point_order(ie, p, 12);
                if (order > 0) torsion.push_back(p);
                if (sgn(y) == 0) break;
            }
        }
    }
    std::sort(torsion.begin(), torsion.end(), [](const PtQ& a, const PtQ& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    });
    torsion.erase(std::unique(torsion.begin(), torsion.end()), torsion.end());

    TorsionGroup g;
    unsigned n = static_cast<unsigned>(torsion.size()) + 1;
    unsigned max_order = 1;
    PtQ max_pt = PtQ::infinity();
    unsigned two_count = 0;
    for (const PtQ& p : torsion) {
        unsigned o = point_order(ie, p, 12);
        if (o == 2) ++two_count;
        if (o > max_order) {
            max_order = o;
            max_pt = p;
        }
    }
    Rat u2(ipow(u, 2)), u3(ipow(u, 3));
    auto back = [&](const PtQ& p) {
        return p.inf ? p : PtQ::affine(p.x / u2, p.y / u3);
    };
    for (const PtQ& p : torsion) g.points.push_back(back(p));
    if (n == 1) return g;
    if (two_count <= 1) {
        g.structure = {n};
        g.generators = {back(max_pt)};
    } else {
        g.structure = {2, n / 2};
        // generator of the large cyclic factor plus an independent 2-torsion point
        std::vector<PtQ> span;
        PtQ q = max_pt;
        for (unsigned k = 1; k <= max_order; ++k) {
            span.push_back(q);
            q = add(ie, q, max_pt);
        }
        PtQ indep = PtQ::infinity();
        for (const PtQ& p : torsion) {
            if (point_order(ie, p, 12) == 2 &&
                std::find(span.begin(), span.end(), p) == span.end()) {
                indep = p;
                break;
            }
        }
        g.generators = {back(indep), back(max_pt)};
    }
    return g;
}

std::vector<Poly> monic_bipoly_qt_roots(const BiPoly& f) {
    int n = f.degree();
    if (n < 1) return {};
    const Poly& lead = f.coeff(n);
    if (!(lead.is_constant() && lead.coeff(0) == 1)) return {};
    for (int i = 0; i < n; ++i) {
        const Poly& c = f.coeff(i);
        for (int j = 0; j <= c.degree(); ++j)
            if (c.coeff(j).get_den() != 1) return {};
    }
    std::vector<Poly> roots;
    int low = 0;
    while (low < n && f.coeff(low).is_zero()) ++low;
    if (low > 0) roots.push_back(Poly::constant(0));
    // deflated polynomial coefficients c[low..n]
    std::vector<Poly> c;
    for (int i = low; i <= n; ++i) c.push_back(f.coeff(i));
    auto is_root = [&](const Poly& cand) {
        Poly acc;
        for (size_t i = c.size(); i-- > 0;) acc = acc * cand + c[i];
        return acc.is_zero();
    };
    if (c.size() >= 2) {
        // Roots of a monic polynomial over Z[t] lie in Z[t] and divide
        // the constant coefficient (Gauss).
        PolyFactorization fz = factor_z(c[0]);
        Int content = 1;
        for (const auto& [q, ex] : fz.content_primes) content *= ipow(q, ex);
        std::vector<Poly> prim_divs{Poly::constant(1)};
        for (const auto& [g, ex] : fz.factors) {
            size_t base = prim_divs.size();
            Poly gk = Poly::constant(1);
            for (unsigned k = 1; k <= ex; ++k) {
                gk = gk * g;
                for (size_t i = 0; i < base; ++i) prim_divs.push_back(prim_divs[i] * gk);
            }
        }
        for (const Int& d : divisors(content)) {
            for (const Poly& g : prim_divs) {
                Poly cand = g * Rat(d);
                if (is_root(cand)) roots.push_back(cand);
                if (is_root(-cand)) roots.push_back(-cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Poly& x, const Poly& y) { return poly_cmp(x, y) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<RatFn> two_torsion_qt(const CurveT& e) {
    if (e.model != CurveModel::Short)
        throw std::invalid_argument("two_torsion_qt: expected Short model");
    if (!e.p1.is_polynomial() || !e.p2.is_polynomial())
        throw std::invalid_argument("two_torsion_qt: expected integral (polynomial) model");
    Poly a = e.p1.num();
    Poly b = e.p2.num();
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i).get_den() != 1)
            throw std::invalid_argument("two_torsion_qt: expected integer coefficients");
    for (int i = 0; i <= b.degree(); ++i)
        if (b.coeff(i).get_den() != 1)
            throw std::invalid_argument("two_torsion_qt: expected integer coefficients");
    BiPoly cubic({b, a, Poly(), Poly::constant(1)});
    std::vector<RatFn> out;
    for (Poly& r : monic_bipoly_qt_roots(cubic)) out.emplace_back(std::move(r));
    return out;
}

CurveQ specialize(const CurveT& e, const Rat& t0) {
    if (!e.p1.defined_at(t0) || !e.p2.defined_at(t0))
        throw pole_error("curve coefficients undefined at " + rat_to_string(t0));
    CurveQ s{e.model, e.p1.eval(t0), e.p2.eval(t0)};
    if (sgn(discriminant(s)) == 0)
        throw singular_specialization("singular fiber at t0 = " + rat_to_string(t0));
    return s;
}

PtQ specialize_pt(const PtT& p, const Rat& t0) {
    if (p.inf) return PtQ::infinity();
    if (!p.x.defined_at(t0) || !p.y.defined_at(t0))
        throw pole_error("point coordinates undefined at " + rat_to_string(t0));
    return PtQ::affine(p.x.eval(t0), p.y.eval(t0));
}

}  // namespace speccert
