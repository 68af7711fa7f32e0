#ifndef SPECCERT_POLY_HPP
#define SPECCERT_POLY_HPP

// Univariate polynomials over Q with Z-primitive canonical representatives.
// A polynomial carries a variable tag; constants are variable-agnostic and
// adopt the other operand's tag in arithmetic.

#include "speccert/exact.hpp"

#include <string>
#include <vector>

namespace speccert {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::string var, std::vector<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly variable(const std::string& var);  // the monomial var^1

    // degree of zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& coeff(size_t i) const;
    const Rat& lc() const;
    const std::string& var() const { return var_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rat eval(const Rat& q) const;
    Poly derivative() const;

    // Rational content: the c with *this = c * primitive_part(), where the
    // primitive part has coprime integer coefficients and positive lc.
    Rat content() const;
    Poly primitive_part() const;
    Poly monic() const;

    std::string render() const;

private:
    void trim();
    std::string var_;       // empty for default/constants until combined
    std::vector<Rat> c_;    // c_[i] multiplies var^i
};

// Deterministic total order: degree, then coefficients from highest down.
int poly_cmp(const Poly& a, const Poly& b);

struct PolyDivRem {
    Poly quot, rem;
};
PolyDivRem divrem(const Poly& a, const Poly& b);

// Exact division; throws if the remainder is nonzero.
Poly div_exact(const Poly& a, const Poly& b);

// Monic-primitive gcd (primitive integer coefficients, positive lc).
Poly poly_gcd(const Poly& a, const Poly& b);

// Yun squarefree decomposition of the primitive part: returns pairs
// (squarefree factor, multiplicity) with multiplicities ascending.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p);

// Square-class representative: product of the odd-multiplicity squarefree
// parts, primitive, carrying the sign of the leading coefficient. Rational
// content is dropped (it is handled as integer square classes separately).
Poly squarefree_part(const Poly& p);

// True iff p = r(t)^2 for some r in Q[t].
bool poly_is_square(const Poly& p);

// All rational roots of p != 0, ascending, multiplicity-free.
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace speccert

#endif
