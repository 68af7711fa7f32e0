#include "speccert/ratfn.hpp"

namespace speccert {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
    canonicalize();
}

void RatFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    Rat lc = den_.lc();
    num_ = num_ * Rat(1 / lc);
    den_ = den_ * Rat(1 / lc);
}

const std::string& RatFn::var() const {
    return num_.is_constant() ? den_.var() : num_.var();
}

Rat RatFn::constant_value() const {
    if (!is_constant()) throw std::domain_error("RatFn: not a constant");
    return num_.coeff(0) / den_.coeff(0);
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

bool RatFn::operator==(const RatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

bool RatFn::defined_at(const Rat& q) const {
    return sgn(den_.eval(q)) != 0;
}

Rat RatFn::eval(const Rat& q) const {
    Rat d = den_.eval(q);
    if (sgn(d) == 0)
        throw pole_error("pole of rational function at " + rat_to_string(q));
    return num_.eval(q) / d;
}

std::string RatFn::render() const {
    if (is_polynomial()) return num_.render();
    std::string n = num_.render();
    std::string d = den_.render();
    bool wrap_n = num_.degree() >= 1;
    bool wrap_d = den_.degree() >= 1 || den_.coeff(0) < 0;
    std::string out = wrap_n ? "(" + n + ")" : n;
    out += "/";
    out += wrap_d ? "(" + d + ")" : d;
    return out;
}

RatFn compose(const Poly& f, const RatFn& g) {
    RatFn r(Rat(0));
    for (int i = f.degree(); i >= 0; --i) {
        r = r * g + RatFn(f.coeff(i));
    }
    return r;
}

RatFn compose(const RatFn& f, const RatFn& g) {
    RatFn den = compose(f.den(), g);
    if (den.is_zero())
        throw std::domain_error("compose: denominator vanishes identically");
    return compose(f.num(), g) / den;
}

}  // namespace speccert
