#include "speccert/bipoly.hpp"

#include <sstream>

namespace speccert {

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& BiPoly::coeff(size_t i) const {
    static const Poly zero;
    return i < c_.size() ? c_[i] : zero;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<Poly> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    std::vector<Poly> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<Poly> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return BiPoly(std::move(r));
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

RatFn BiPoly::eval_x(const RatFn& v) const {
    RatFn r;
    for (size_t i = c_.size(); i-- > 0;) r = r * v + RatFn(c_[i]);
    return r;
}

Poly BiPoly::specialize_t(const Rat& t0, const std::string& outer_var) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval(t0);
    return Poly(outer_var, std::move(r));
}

std::string BiPoly::render(const std::string& outer_var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) out << "+";
        first = false;
        out << "(" << c_[i].render() << ")";
        if (i > 0) {
            out << "*" << outer_var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

BiPolyR::BiPolyR(std::vector<RatFn> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPolyR::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatFn& BiPolyR::coeff(size_t i) const {
    static const RatFn zero;
    return i < c_.size() ? c_[i] : zero;
}

BiPolyR BiPolyR::operator+(const BiPolyR& o) const {
    std::vector<RatFn> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return BiPolyR(std::move(r));
}

BiPolyR BiPolyR::operator-(const BiPolyR& o) const { return *this + (-o); }

BiPolyR BiPolyR::operator-() const {
    std::vector<RatFn> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return BiPolyR(std::move(r));
}

BiPolyR BiPolyR::operator*(const BiPolyR& o) const {
    if (is_zero() || o.is_zero()) return BiPolyR();
    std::vector<RatFn> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return BiPolyR(std::move(r));
}

RatFn BiPolyR::eval_x(const RatFn& v) const {
    RatFn r;
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

std::pair<BiPoly, Poly> BiPolyR::clear_denominators() const {
    Poly l = Poly::constant(1);
    for (const RatFn& c : c_) {
        Poly g = poly_gcd(l, c.den());
        l = g.degree() >= 1 ? l * div_exact(c.den(), g) : l * c.den();
    }
    l = l.monic();
    std::vector<Poly> cleared(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        RatFn v = c_[i] * RatFn(l);
        if (!v.is_polynomial())
            throw std::logic_error("clear_denominators: lcm failed");
        cleared[i] = v.num();
    }
    return {BiPoly(std::move(cleared)), l};
}

BiPolyR bipoly_substitute(const BiPoly& p, const RatFn& u) {
    std::vector<RatFn> r(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r[i] = compose(p.coeff(i), u);
    return BiPolyR(std::move(r));
}

BiPolyR to_bipolyr(const BiPoly& p) {
    std::vector<RatFn> r(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r[i] = RatFn(p.coeff(i));
    return BiPolyR(std::move(r));
}

BiPolyR bipoly_divrem_rem(const BiPolyR& a, const BiPolyR& b) {
    if (b.is_zero()) throw std::domain_error("bipoly division by zero");
    BiPolyR r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        RatFn f = r.coeff(r.degree()) / b.coeff(b.degree());
        std::vector<RatFn> mono(r.degree() - b.degree() + 1);
        mono.back() = f;
        r = r - BiPolyR(std::move(mono)) * b;
    }
    return r;
}

}  // namespace speccert
