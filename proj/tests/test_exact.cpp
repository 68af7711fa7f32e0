#include "doctest.h"
#include "speccert/exact.hpp"

using namespace speccert;

namespace {
uint64_t state = 0x243f6a8885a308d3ULL;
long rnd(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 11) % static_cast<uint64_t>(hi - lo + 1));
}
}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("8/15") == Rat(8, 15));
    CHECK(parse_rat("-3/2") == Rat(-3, 2));
    CHECK(parse_rat("27") == 27);
    CHECK(rat_to_string(parse_rat("-6/4")) == "-3/2");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("isqrt floor and exactness") {
    for (long n = 0; n <= 2000; ++n) {
        IsqrtResult r = isqrt(Int(n));
        CHECK(r.root * r.root <= n);
        CHECK((r.root + 1) * (r.root + 1) > n);
        CHECK(r.exact == (r.root * r.root == n));
    }
}

TEST_CASE("is_square basic cases") {
    CHECK(is_square(Rat(0)));
    CHECK(is_square(Rat(1)));
    CHECK(is_square(Rat(4, 9)));
    CHECK(is_square(Rat(49, 64)));
    CHECK_FALSE(is_square(Rat(-4)));
    CHECK_FALSE(is_square(Rat(2)));
    CHECK_FALSE(is_square(Rat(4, 3)));
}

TEST_CASE("is_square scaling invariance") {
    for (int i = 0; i < 1200; ++i) {
        Rat q(rnd(-1000000, 1000000), rnd(1, 9999));
        q.canonicalize();
        Rat s(rnd(1, 9999), rnd(1, 999));
        if (rnd(0, 1)) s = -s;
        s.canonicalize();
        CHECK(is_square(q * s * s) == is_square(q));
    }
}

TEST_CASE("primality on known values") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(3)));
    CHECK(is_prime(Int(104729)));
    CHECK(is_prime(Int("32416190071")));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(104729) * 104729));
    // strong pseudoprime to several small bases
    CHECK_FALSE(is_prime(Int("3215031751")));
}

TEST_CASE("factor_int on the Example 3 discriminant-style value") {
    IntFactorization f = factor_int(Int(10530));
    REQUIRE(f.primes.size() == 4);
    CHECK(f.primes[0] == std::pair<Int, unsigned>(Int(2), 1));
    CHECK(f.primes[1] == std::pair<Int, unsigned>(Int(3), 4));
    CHECK(f.primes[2] == std::pair<Int, unsigned>(Int(5), 1));
    CHECK(f.primes[3] == std::pair<Int, unsigned>(Int(13), 1));
    CHECK(f.reconstruct() == 10530);
}

TEST_CASE("factor_int reconstruction on random values") {
    for (int i = 0; i < 300; ++i) {
        Int n = Int(rnd(-1000000000L, 1000000000L));
        if (sgn(n) == 0) n = 1;
        IntFactorization f = factor_int(n);
        CHECK(f.reconstruct() == n);
        for (const auto& [p, e] : f.primes) {
            CHECK(e >= 1);
            CHECK(is_prime(p));
        }
    }
}

TEST_CASE("divisors and squarefree part") {
    std::vector<Int> d = divisors(Int(12));
    CHECK(d == std::vector<Int>({1, 2, 3, 4, 6, 12}));
    CHECK(squarefree_part_int(Int(12)) == 3);
    CHECK(squarefree_part_int(Int(-18)) == -2);
    CHECK(squarefree_part_int(Int(1)) == 1);
}
