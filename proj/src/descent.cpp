#include "speccert/descent.hpp"

#include <sstream>

namespace speccert {

Rat Generator::eval(const Rat& t0) const {
    switch (kind) {
        case Kind::MinusOne: return Rat(-1);
        case Kind::Prime: return Rat(prime);
        case Kind::Polynomial: return poly.eval(t0);
    }
    throw std::logic_error("Generator::eval: bad kind");
}

std::string Generator::render() const {
    switch (kind) {
        case Kind::MinusOne: return "-1";
        case Kind::Prime: return prime.get_str();
        case Kind::Polynomial: return poly.render();
    }
    throw std::logic_error("Generator::render: bad kind");
}

bool Generator::same_class(const Generator& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::MinusOne: return true;
        case Kind::Prime: return prime == o.prime;
        case Kind::Polynomial: return poly == o.poly;
    }
    return false;
}

void FactorBase::add(Generator g) {
    for (const Generator& h : gens) {
        if (h.same_class(g)) return;
    }
    gens.push_back(std::move(g));
}

std::string FactorBase::render() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out << ", ";
        out << gens[i].render();
    }
    out << "}";
    return out.str();
}

namespace {

void add_factors(FactorBase& base, const Poly& p, const std::string& provenance) {
    PolyFactorization f = factor_z(p);
    for (const auto& [q, e] : f.content_primes) {
        (void)e;
        base.add(Generator{Generator::Kind::Prime, q, Poly(), provenance});
    }
    for (const auto& [g, e] : f.factors) {
        (void)e;
        base.add(Generator{Generator::Kind::Polynomial, Int(0), g, provenance});
    }
}

}  // namespace

FactorBase build_base_2descent(const Poly& e1, const Poly& e2, const Poly& e3) {
    Poly d12 = e1 - e2, d23 = e2 - e3, d13 = e1 - e3;
    if (d12.is_zero() || d23.is_zero() || d13.is_zero())
        throw std::invalid_argument("build_base_2descent: repeated root (singular curve)");
    FactorBase base;
    base.add(Generator{Generator::Kind::MinusOne, Int(0), Poly(), "unit"});
    add_factors(base, d12, "e1-e2");
    add_factors(base, d23, "e2-e3");
    add_factors(base, d13, "e1-e3");
    return base;
}

std::pair<FactorBase, FactorBase> build_base_2isogeny(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::invalid_argument("build_base_2isogeny: b = 0 (singular curve)");
    Poly disc_part = a * a - b * Rat(4);
    if (disc_part.is_zero())
        throw std::invalid_argument("build_base_2isogeny: a^2-4b = 0 (singular curve)");
    if (poly_is_square(disc_part))
        throw criterion_inapplicable(
            "a^2-4b is a square in Q(t); full 2-torsion present, use the 2-descent criterion");
    FactorBase g_phi, g_phihat;
    g_phi.add(Generator{Generator::Kind::MinusOne, Int(0), Poly(), "unit"});
    add_factors(g_phi, b, "b");
    g_phihat.add(Generator{Generator::Kind::MinusOne, Int(0), Poly(), "unit"});
    add_factors(g_phihat, disc_part, "a^2-4b");
    return {std::move(g_phi), std::move(g_phihat)};
}

FactorBase base_from_discriminant(const CurveT& e) {
    RatFn d16 = discriminant_over_16(e);
    if (!d16.is_polynomial())
        throw std::invalid_argument("base_from_discriminant: expected integral model");
    FactorBase base;
    base.add(Generator{Generator::Kind::MinusOne, Int(0), Poly(), "unit"});
    add_factors(base, d16.num(), "Delta/16");
    return base;
}

BaseCheck check_base(const FactorBase& base, const Rat& t0) {
    BaseCheck r;
    for (const Generator& g : base.gens) r.gen_names.push_back(g.render());
    std::vector<Rat> values;
    values.reserve(base.size());
    for (const Generator& g : base.gens) {
        Rat v = g.eval(t0);
        if (sgn(v) == 0) {
            r.verdict = Verdict::Indeterminate;
            r.reason = "generator " + g.render() + " vanishes at " + rat_to_string(t0) +
                       "; 0 is a square, criterion cannot hold";
            return r;
        }
        values.push_back(std::move(v));
    }
    r.gen_values = values;
    uint64_t total = (uint64_t{1} << base.size()) - 1;
    for (uint64_t mask = 1; mask <= total; ++mask) {
        Rat prod(1);
        for (size_t i = 0; i < base.size(); ++i) {
            if (mask & (uint64_t{1} << i)) prod *= values[i];
        }
        bool sq = is_square(prod);
        r.checks.push_back(ProductCheck{mask, prod, sq});
        if (sq) {
            r.verdict = Verdict::Fails;
            r.witness_mask = mask;
            r.witness_value = prod;
            return r;
        }
    }
    r.verdict = Verdict::Holds;
    return r;
}

CriterionReport check_criterion_2descent(const FactorBase& base, const Rat& t0) {
    CriterionReport rep;
    rep.sides.emplace_back("base", check_base(base, t0));
    rep.verdict = rep.sides[0].second.verdict;
    return rep;
}

CriterionReport check_criterion_2isogeny(const FactorBase& g_phi,
                                         const FactorBase& g_phihat,
                                         const Rat& t0) {
    CriterionReport rep;
    rep.sides.emplace_back("G_phi", check_base(g_phi, t0));
    rep.sides.emplace_back("G_phihat", check_base(g_phihat, t0));
    rep.verdict = Verdict::Holds;
    for (const auto& [name, side] : rep.sides) {
        (void)name;
        if (side.verdict == Verdict::Indeterminate) {
            rep.verdict = Verdict::Indeterminate;
            break;
        }
        if (side.verdict == Verdict::Fails && rep.verdict == Verdict::Holds)
            rep.verdict = Verdict::Fails;
    }
    return rep;
}

}  // namespace speccert
