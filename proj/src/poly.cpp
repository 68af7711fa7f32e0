#include "speccert/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace speccert {

namespace {

std::string merge_vars(const Poly& a, const Poly& b) {
    const std::string& va = a.var();
    const std::string& vb = b.var();
    if (a.is_constant() || va.empty()) return b.is_constant() && vb.empty() ? va : vb;
    if (b.is_constant() || vb.empty()) return va;
    if (va != vb)
        throw std::invalid_argument("polynomial variable mismatch: '" + va +
                                    "' vs '" + vb + "'");
    return va;
}

}  // namespace

Poly::Poly(std::string var, std::vector<Rat> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (sgn(c) != 0) p.c_ = {c};
    return p;
}

Poly Poly::variable(const std::string& var) {
    return Poly(var, {Rat(0), Rat(1)});
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& Poly::coeff(size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Rat& Poly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.var_ = merge_vars(*this, o);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    r.var_ = merge_vars(*this, o);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& s) const {
    Poly r = *this;
    for (Rat& x : r.c_) x *= s;
    r.trim();
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(1);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (c_ != o.c_) return false;
    if (c_.size() <= 1) return true;  // constants compare var-agnostically
    return var_ == o.var_ || var_.empty() || o.var_.empty();
}

Rat Poly::eval(const Rat& q) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * q + c_[i];
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    r.var_ = var_;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

Rat Poly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& x : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    Rat c = make_rat(num_gcd, den_lcm);
    if (sgn(lc()) < 0) c = -c;
    return c;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Rat c = content();
    return *this * Rat(1 / c);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * Rat(1 / lc());
}

std::string Poly::render() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& x = c_[i];
        if (sgn(x) == 0) continue;
        Rat a = abs(x);
        if (first) {
            if (sgn(x) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(x) < 0 ? "-" : "+");
        }
        bool coeff_one = (a == 1);
        if (i == 0 || !coeff_one) out << rat_to_string(a);
        if (i > 0) {
            if (!coeff_one) out << "*";
            out << var_;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

PolyDivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyDivRem r{Poly(), a};
    int db = b.degree();
    std::vector<Rat> q(a.degree() >= db ? a.degree() - db + 1 : 0, Rat(0));
    while (!r.rem.is_zero() && r.rem.degree() >= db) {
        int k = r.rem.degree() - db;
        Rat f = r.rem.lc() / b.lc();
        q[k] = f;
        std::vector<Rat> mono(k + 1, Rat(0));
        mono[k] = f;
        r.rem = r.rem - b * Poly(b.var(), mono);
    }
    std::string var = a.var().empty() ? b.var() : a.var();
    r.quot = Poly(var, std::move(q));
    return r;
}

Poly div_exact(const Poly& a, const Poly& b) {
    PolyDivRem d = divrem(a, b);
    if (!d.rem.is_zero()) throw std::domain_error("div_exact: nonzero remainder");
    return d.quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a.primitive_part(), y = b.primitive_part();
    while (!y.is_zero()) {
        Poly r = divrem(x, y).rem;
        x = y;
        y = r.primitive_part();
    }
    if (x.is_zero()) return x;
    return x.primitive_part();
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Poly, unsigned>> out;
    // Yun's algorithm (characteristic zero).
    Poly f = p.primitive_part();
    if (f.degree() < 1) return out;
    Poly d = f.derivative();
    Poly u = poly_gcd(f, d);
    Poly v = div_exact(f, u);
    Poly wq = div_exact(d, u);
    unsigned mult = 1;
    while (v.degree() >= 1) {
        Poly z = wq - v.derivative();
        Poly h = poly_gcd(v, z);
        if (h.degree() >= 1) out.emplace_back(h, mult);
        v = div_exact(v, h);
        wq = div_exact(z, h);
        ++mult;
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero");
    Poly r = Poly::constant(1);
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        if (m % 2 == 1) r = r * f;
    }
    r = r.primitive_part();
    if (sgn(p.lc()) < 0) r = -r;
    return r;
}

bool poly_is_square(const Poly& p) {
    if (p.is_zero()) return true;
    if (sgn(p.lc()) < 0) return false;
    if (!is_square(p.content())) return false;
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        (void)f;
        if (m % 2 == 1) return false;
    }
    return true;
}

std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of zero");
    std::vector<Rat> roots;
    Poly f = p.primitive_part();
    // strip powers of the variable
    size_t low = 0;
    while (low <= static_cast<size_t>(f.degree()) && sgn(f.coeff(low)) == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        std::vector<Rat> shifted;
        for (size_t i = low; i <= static_cast<size_t>(f.degree()); ++i)
            shifted.push_back(f.coeff(i));
        f = Poly(f.var(), std::move(shifted));
    }
    if (f.degree() >= 1) {
        Int a0 = f.coeff(0).get_num();  // integer: f is primitive, const != 0
        Int ad = f.lc().get_num();
        for (const Int& num : divisors(a0)) {
            for (const Int& den : divisors(ad)) {
                Rat cand = make_rat(num, den);
                for (int s = 0; s < 2; ++s) {
                    if (sgn(f.eval(cand)) == 0) roots.push_back(cand);
                    cand = -cand;
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace speccert
