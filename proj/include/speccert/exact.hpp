#ifndef SPECCERT_EXACT_HPP
#define SPECCERT_EXACT_HPP

// Arbitrary-precision integers and rationals plus the handful of
// number-theoretic primitives the rest of the library needs: exact
// integer square roots, perfect-square tests on rationals, primality
// and small-scale factorization.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace speccert {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& q);

struct IsqrtResult {
    Int root;  // floor(sqrt(n))
    bool exact;
};

// n must be nonnegative.
IsqrtResult isqrt(const Int& n);

// True iff q is the square of a rational.
bool is_square(const Rat& q);

// Deterministic Miller-Rabin below 3.3e14, 25 fixed prime witnesses above.
bool is_prime(const Int& n);

struct IntFactorization {
    int sign = 1;                                 // +1 or -1
    std::vector<std::pair<Int, unsigned>> primes; // ascending, exponents >= 1

    Int reconstruct() const;
};

// Complete factorization of n != 0. Trial division to 1e6, Pollard rho
// beyond; intended for desk-scale inputs (discriminants of small curves).
IntFactorization factor_int(const Int& n);

// All positive divisors of |n|, ascending. n != 0.
std::vector<Int> divisors(const Int& n);

// Largest s with n = s * m^2, sign preserved (squarefree part of n). n != 0.
Int squarefree_part_int(const Int& n);

}  // namespace speccert

#endif
