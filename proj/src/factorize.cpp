#include "speccert/factorize.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace speccert {

namespace {

// Integer polynomials as ascending coefficient vectors, trimmed.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zreduce(const ZPoly& a, const Int& m) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    }
    ztrim(r);
    return r;
}

// Map coefficients into (-m/2, m/2].
ZPoly zsymmetric(const ZPoly& a, const Int& m) {
    ZPoly r = zreduce(a, m);
    Int half = m / 2;
    for (Int& c : r) {
        if (c > half) c -= m;
    }
    ztrim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zreduce(r, m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zreduce(r, m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(r, m);
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("inv_mod: not invertible");
    return r;
}

// Division with remainder mod m; divisor must have invertible lc mod m
// (always monic where m is composite).
void zdivrem(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    if (b.empty()) throw std::domain_error("zdivrem: zero divisor");
    Int lc_inv = inv_mod(b.back(), m);
    r = zreduce(a, m);
    q.assign(zdeg(r) >= zdeg(b) ? zdeg(r) - zdeg(b) + 1 : 0, Int(0));
    while (zdeg(r) >= zdeg(b)) {
        int k = zdeg(r) - zdeg(b);
        Int f = (r.back() * lc_inv) % m;
        q[k] = (q[k] + f) % m;
        for (size_t i = 0; i < b.size(); ++i) {
            Int v = r[k + i] - f * b[i];
            mpz_mod(r[k + i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        }
        ztrim(r);
    }
    q = zreduce(q, m);
    r = zreduce(r, m);
}

ZPoly zmod_poly(const ZPoly& a, const ZPoly& f, const Int& m) {
    ZPoly q, r;
    zdivrem(a, f, m, q, r);
    return r;
}

ZPoly zmonic(const ZPoly& a, const Int& p) {
    if (a.empty()) return a;
    Int inv = inv_mod(a.back(), p);
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * inv) % p;
    return zreduce(r, p);
}

ZPoly zgcd_mod(ZPoly a, ZPoly b, const Int& p) {
    a = zreduce(a, p);
    b = zreduce(b, p);
    while (!b.empty()) {
        ZPoly r = zmod_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : zmonic(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b.
void zbezout(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t) {
    ZPoly r0 = zreduce(a, p), r1 = zreduce(b, p);
    ZPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
    while (!r1.empty()) {
        ZPoly q, r;
        zdivrem(r0, r1, p, q, r);
        ZPoly s2 = zsub(s0, zmul(q, s1, p), p);
        ZPoly t2 = zsub(t0, zmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (zdeg(r0) != 0) throw std::domain_error("zbezout: inputs not coprime");
    Int inv = inv_mod(r0[0], p);
    s = s0; t = t0;
    for (Int& c : s) c = (c * inv) % p;
    for (Int& c : t) c = (c * inv) % p;
    s = zreduce(s, p);
    t = zreduce(t, p);
}

ZPoly zderiv(const ZPoly& a, const Int& m) {
    ZPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back((a[i] * Int(static_cast<long>(i))) % m);
    return zreduce(r, m);
}

ZPoly zpowmod(ZPoly base, Int e, const ZPoly& f, const Int& p) {
    ZPoly r{Int(1)};
    base = zmod_poly(base, f, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zmod_poly(zmul(r, base, p), f, p);
        base = zmod_poly(zmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Deterministic pseudo-random stream for equal-degree splitting.
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed ^ 0x9E3779B97F4A7C15ull) {}
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }
};

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree mod odd p,
// all irreducible factors of degree d.
void equal_degree(const ZPoly& f, int d, const Int& p, Lcg& rng,
                  std::vector<ZPoly>& out) {
    int n = zdeg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), d);
    Int e = (q - 1) / 2;
    for (;;) {
        ZPoly r(n);
        for (int i = 0; i < n; ++i) r[i] = Int(static_cast<long>(rng.next() % 1000003));
        r = zreduce(r, p);
        if (zdeg(r) < 1) continue;
        ZPoly g = zgcd_mod(r, f, p);
        if (zdeg(g) > 0 && zdeg(g) < n) {
            ZPoly qq, rr;
            zdivrem(f, g, p, qq, rr);
            equal_degree(g, d, p, rng, out);
            equal_degree(zmonic(qq, p), d, p, rng, out);
            return;
        }
        ZPoly b = zpowmod(r, e, f, p);
        b = zsub(b, ZPoly{Int(1)}, p);
        g = zgcd_mod(b, f, p);
        if (zdeg(g) > 0 && zdeg(g) < n) {
            ZPoly qq, rr;
            zdivrem(f, g, p, qq, rr);
            equal_degree(g, d, p, rng, out);
            equal_degree(zmonic(qq, p), d, p, rng, out);
            return;
        }
    }
}

// Full factorization of monic squarefree f mod odd prime p.
std::vector<ZPoly> factor_mod_p(const ZPoly& f, const Int& p) {
    std::vector<ZPoly> out;
    Lcg rng(0xC0FFEEull ^ static_cast<uint64_t>(p.get_ui()) ^
            (static_cast<uint64_t>(zdeg(f)) << 32));
    ZPoly rest = f;
    ZPoly x{Int(0), Int(1)};
    ZPoly h = x;
    int d = 0;
    while (zdeg(rest) > 0) {
        ++d;
        if (2 * d > zdeg(rest)) {
            out.push_back(rest);
            break;
        }
        h = zpowmod(h, p, rest, p);
        ZPoly g = zgcd_mod(zsub(h, x, p), rest, p);
        if (zdeg(g) > 0) {
            equal_degree(g, d, p, rng, out);
            ZPoly q, r;
            zdivrem(rest, g, p, q, r);
            rest = zmonic(q, p);
            h = zmod_poly(h, rest, p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m),
// g, h monic. Produces the same data mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                 const Int& m) {
    Int m2 = m * m;
    ZPoly e = zsub(f, zmul(g, h, m2), m2);
    ZPoly q, r;
    zdivrem(zmul(s, e, m2), h, m2, q, r);
    g = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
    h = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, g, m2), zmul(t, h, m2), m2), ZPoly{Int(1)}, m2);
    ZPoly c, d;
    zdivrem(zmul(s, b, m2), h, m2, c, d);
    s = zsub(s, d, m2);
    t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g, m2), m2), m2);
}

// Lift f = prod(factors) from mod p to mod p^(2^levels), recursively.
void hensel_multifactor(const ZPoly& f, std::vector<ZPoly>& facs, size_t lo,
                        size_t hi, const Int& p, int levels, const Int& m_final) {
    if (hi - lo == 1) {
        facs[lo] = zreduce(f, m_final);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ZPoly g{Int(1)}, h{Int(1)};
    for (size_t i = lo; i < mid; ++i) g = zmul(g, facs[i], p);
    for (size_t i = mid; i < hi; ++i) h = zmul(h, facs[i], p);
    ZPoly s, t;
    zbezout(g, h, p, s, t);
    Int m = p;
    for (int l = 0; l < levels; ++l) {
        hensel_step(zreduce(f, m * m), g, h, s, t, m);
        m = m * m;
    }
    hensel_multifactor(g, facs, lo, mid, p, levels, m_final);
    hensel_multifactor(h, facs, mid, hi, p, levels, m_final);
}

ZPoly poly_to_z(const Poly& p) {
    ZPoly r(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).get_den() != 1)
            throw std::domain_error("poly_to_z: non-integer coefficient");
        r[i] = p.coeff(i).get_num();
    }
    return r;
}

Poly z_to_poly(const ZPoly& a, const std::string& var) {
    std::vector<Rat> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Rat(a[i]);
    return Poly(var, std::move(c));
}

// Mignotte-style coefficient bound for divisors of monic F.
Int coeff_bound(const ZPoly& f) {
    Int norm2 = 0;
    for (const Int& c : f) norm2 += c * c;
    Int b = isqrt(norm2).root + 1;
    Int two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, zdeg(f) + 1);
    return b * two_n;
}

// Factor a monic squarefree integer polynomial into monic irreducibles.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
    if (f.empty() || f.back() != 1)
        throw std::logic_error("factor_monic_squarefree: input not monic");
    if (zdeg(f) == 1) return {f};
    // Pick an odd prime keeping f squarefree mod p.
    Int p = 0;
    for (long cand : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L,
                      43L, 47L, 53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L,
                      97L, 101L, 103L, 107L, 109L, 113L, 127L, 131L}) {
        Int q(cand);
        ZPoly fp = zreduce(f, q);
        if (zdeg(fp) != zdeg(f)) continue;  // lc vanished (monic: cannot)
        if (zdeg(zgcd_mod(fp, zderiv(fp, q), q)) == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) throw std::runtime_error("factor: no suitable small prime found");

    std::vector<ZPoly> modular = factor_mod_p(zreduce(f, p), p);
    if (modular.size() == 1) return {f};

    Int bound = 2 * coeff_bound(f) + 1;
    int levels = 0;
    Int m = p;
    while (m < bound) {
        m = m * m;
        ++levels;
    }
    hensel_multifactor(zreduce(f, m), modular, 0, modular.size(), p, levels, m);

    // Subset recombination against the true factors over Z.
    std::vector<ZPoly> result;
    std::vector<size_t> live(modular.size());
    std::iota(live.begin(), live.end(), 0);
    ZPoly rest = f;
    size_t card = 1;
    while (2 * card <= live.size()) {
        // enumerate index subsets of size `card` over `live`
        std::vector<size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        bool removed = false;
        for (;;) {
            ZPoly cand{Int(1)};
            for (size_t i : idx) cand = zmul(cand, modular[live[i]], m);
            cand = zsymmetric(cand, m);
            // trial division over Z
            Poly num = z_to_poly(rest, "t");
            Poly den = z_to_poly(cand, "t");
            PolyDivRem dr = divrem(num, den);
            bool ok = dr.rem.is_zero();
            if (ok) {
                // quotient must be integral too; it is, since den is monic
                result.push_back(cand);
                ZPoly q = poly_to_z(dr.quot);
                rest = q;
                std::vector<size_t> nl;
                for (size_t i = 0, j = 0; i < live.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    nl.push_back(live[i]);
                }
                live = std::move(nl);
                removed = true;
                break;
            }
            // next subset
            int k = static_cast<int>(card) - 1;
            while (k >= 0 && idx[k] == live.size() - card + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (size_t j = k + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!removed) ++card;
    }
    if (zdeg(rest) > 0) result.push_back(rest);
    return result;
}

// Factor a primitive squarefree integer polynomial (positive lc) into
// primitive irreducibles, via monicization when the lc is not 1.
std::vector<Poly> factor_primitive_squarefree(const Poly& g) {
    const std::string& var = g.var().empty() ? "t" : g.var();
    if (g.degree() == 1) return {g};
    Int b = g.lc().get_num();
    if (b == 1) {
        std::vector<Poly> out;
        for (const ZPoly& f : factor_monic_squarefree(poly_to_z(g)))
            out.push_back(z_to_poly(f, var));
        return out;
    }
    // G(x) = b^(n-1) * g(x/b) is monic with integer coefficients.
    int n = g.degree();
    std::vector<Rat> gc(n + 1);
    gc[n] = 1;
    Int scale = 1;  // b^(n-1-i)
    for (int i = n - 1; i >= 0; --i) {
        gc[i] = g.coeff(i) * Rat(scale);
        scale *= b;
    }
    Poly G(var, std::move(gc));
    std::vector<Poly> out;
    Poly bx(var, {Rat(0), Rat(b)});
    for (const ZPoly& f : factor_monic_squarefree(poly_to_z(G))) {
        // undo x -> b x and renormalize
        Poly h = z_to_poly(f, var);
        Poly comp = Poly::constant(0);
        for (int i = h.degree(); i >= 0; --i)
            comp = comp * bx + Poly::constant(h.coeff(i));
        out.push_back(comp.primitive_part());
    }
    return out;
}

}  // namespace

Poly PolyFactorization::reconstruct() const {
    Rat c(unit);
    for (const auto& [p, e] : content_primes) {
        Rat pe(p);
        if (e >= 0)
            for (int i = 0; i < e; ++i) c *= pe;
        else
            for (int i = 0; i < -e; ++i) c /= pe;
    }
    Poly r = Poly::constant(c);
    for (const auto& [f, e] : factors) r = r * f.pow(e);
    return r;
}

PolyFactorization factor_z(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("factor_z: zero input");
    PolyFactorization out;
    Rat c = p.content();
    out.unit = sgn(c) < 0 ? -1 : 1;
    for (const auto& [q, e] : factor_int(abs(c.get_num())).primes)
        out.content_primes.emplace_back(q, static_cast<int>(e));
    for (const auto& [q, e] : factor_int(c.get_den()).primes) {
        bool merged = false;
        for (auto& [cp, ce] : out.content_primes)
            if (cp == q) { ce -= static_cast<int>(e); merged = true; }
        if (!merged) out.content_primes.emplace_back(q, -static_cast<int>(e));
    }
    std::sort(out.content_primes.begin(), out.content_primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.content_primes.erase(
        std::remove_if(out.content_primes.begin(), out.content_primes.end(),
                       [](const auto& pe) { return pe.second == 0; }),
        out.content_primes.end());

    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        for (const Poly& f : factor_primitive_squarefree(g))
            out.factors.emplace_back(f, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  return poly_cmp(a.first, b.first) < 0;
              });
    // merge equal factors from different squarefree parts (cannot happen
    // for valid Yun output, but keep the invariant airtight)
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& fe : out.factors) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(fe);
    }
    out.factors = std::move(merged);
    return out;
}

}  // namespace speccert
