#ifndef SPECCERT_BIPOLY_HPP
#define SPECCERT_BIPOLY_HPP

// Polynomials in an outer variable x whose coefficients live in Q[t]
// (BiPoly) or Q(t) (BiPolyR). Used for 2-division quartics, the 2-torsion
// cubic, and their images under a parametrization t -> u(alpha).

#include "speccert/ratfn.hpp"

namespace speccert {

class BiPolyR;

class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Poly& coeff(size_t i) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const;

    // Evaluate the outer variable at a rational function.
    RatFn eval_x(const RatFn& v) const;
    // Evaluate the inner variable, giving a univariate Poly in `outer_var`.
    Poly specialize_t(const Rat& t0, const std::string& outer_var) const;

    std::string render(const std::string& outer_var) const;

private:
    void trim();
    std::vector<Poly> c_;  // c_[i] multiplies x^i
};

class BiPolyR {
public:
    BiPolyR() = default;
    explicit BiPolyR(std::vector<RatFn> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const RatFn& coeff(size_t i) const;

    BiPolyR operator+(const BiPolyR& o) const;
    BiPolyR operator-(const BiPolyR& o) const;
    BiPolyR operator*(const BiPolyR& o) const;
    BiPolyR operator-() const;

    RatFn eval_x(const RatFn& v) const;

    // Clear denominators: returns (B, L) with L the monic lcm of the
    // coefficient denominators and B = L * this, polynomial throughout.
    std::pair<BiPoly, Poly> clear_denominators() const;

private:
    void trim();
    std::vector<RatFn> c_;
};

// Replace every t-coefficient by its composition with u.
BiPolyR bipoly_substitute(const BiPoly& p, const RatFn& u);

// Remainder of a by b in x over Q(t); used for divisibility checks.
BiPolyR bipoly_divrem_rem(const BiPolyR& a, const BiPolyR& b);
BiPolyR to_bipolyr(const BiPoly& p);

}  // namespace speccert

#endif
