#include "speccert/exact.hpp"

#include <algorithm>

namespace speccert {

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q(Int(text), 1);
            q.canonicalize();
            return q;
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: bad rational literal '" + text + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IsqrtResult isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt: negative input");
    IsqrtResult r;
    mpz_class rem;
    mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    r.exact = (sgn(rem) == 0);
    return r;
}

bool is_square(const Rat& q) {
    if (sgn(q) < 0) return false;
    // q is canonical: num/den in lowest terms, den > 0.
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    // Returns true if a proves n composite.
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

// First 25 primes; used both as the deterministic base set (the first
// seven suffice below 3.3e14) and as fixed witnesses above it.
const int kWitnesses[25] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

Int pollard_rho(const Int& n);

void factor_into(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

Int pollard_rho(const Int& n) {
    // Brent's cycle variant with deterministic parameter sweep.
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x, saved_y;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (sgn(diff) == 0) break;  // cycle without factor, bump c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    const Int small_threshold("330000000000000");  // 3.3e14
    int count = n < small_threshold ? 7 : 25;
    for (int i = 0; i < count; ++i) {
        if (miller_rabin_witness(n, Int(kWitnesses[i]))) return false;
    }
    return true;
}

Int IntFactorization::reconstruct() const {
    Int r = sign;
    for (const auto& [p, e] : primes) {
        for (unsigned i = 0; i < e; ++i) r *= p;
    }
    return r;
}

IntFactorization factor_int(const Int& n) {
    if (sgn(n) == 0) throw std::domain_error("factor_int: zero input");
    IntFactorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::vector<Int> found;
    // Trial division up to 1e6 strips all desk-scale prime content cheaply.
    for (long p = 2; p <= 1000000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (Int(p) * p > m) break;
        while (m % p == 0) {
            found.emplace_back(p);
            m /= p;
        }
    }
    if (m > 1) factor_into(m, found);
    std::sort(found.begin(), found.end());
    for (const Int& p : found) {
        if (!f.primes.empty() && f.primes.back().first == p)
            ++f.primes.back().second;
        else
            f.primes.emplace_back(p, 1);
    }
    return f;
}

std::vector<Int> divisors(const Int& n) {
    IntFactorization f = factor_int(n);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f.primes) {
        size_t base = divs.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int squarefree_part_int(const Int& n) {
    IntFactorization f = factor_int(n);
    Int r = f.sign;
    for (const auto& [p, e] : f.primes) {
        if (e % 2 == 1) r *= p;
    }
    return r;
}

}  // namespace speccert
