#ifndef SPECCERT_RATFN_HPP
#define SPECCERT_RATFN_HPP

// Elements of Q(t) (or Q(alpha)) as canonical quotients of polynomials:
// gcd(num, den) = 1 and den monic.

#include "speccert/poly.hpp"

namespace speccert {

class RatFn {
public:
    RatFn() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
    RatFn(Poly num, Poly den);
    /*implicit*/ RatFn(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
    /*implicit*/ RatFn(const Rat& q) : num_(Poly::constant(q)), den_(Poly::constant(1)) {}
    /*implicit*/ RatFn(long n) : num_(Poly::constant(Rat(n))), den_(Poly::constant(1)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    const std::string& var() const;
    Rat constant_value() const;  // requires is_constant()

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    bool operator==(const RatFn& o) const;
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    // Evaluation at a rational point; throws pole_error at poles.
    Rat eval(const Rat& q) const;
    bool defined_at(const Rat& q) const;

    std::string render() const;

private:
    void canonicalize();
    Poly num_, den_;
};

struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// f(g): substitute g for the variable of f.
RatFn compose(const RatFn& f, const RatFn& g);
RatFn compose(const Poly& f, const RatFn& g);

}  // namespace speccert

#endif
