#ifndef SPECCERT_FACTORIZE_HPP
#define SPECCERT_FACTORIZE_HPP

// Irreducible factorization in Z[t]: squarefree decomposition, modular
// factorization (distinct-degree + equal-degree splitting), quadratic
// Hensel lifting, and subset recombination. Sized for desk-scale inputs
// (degree <= ~24, moderate coefficients).

#include "speccert/poly.hpp"

#include <vector>

namespace speccert {

struct PolyFactorization {
    int unit = 1;                                     // +1 or -1
    std::vector<std::pair<Int, int>> content_primes;  // exponent < 0 => denominator
    std::vector<std::pair<Poly, unsigned>> factors;   // primitive irreducible, +lc

    Poly reconstruct() const;
};

// Complete irreducible factorization of p != 0 over Z[t] (rational inputs
// contribute denominator primes to the content).
PolyFactorization factor_z(const Poly& p);

}  // namespace speccert

#endif
