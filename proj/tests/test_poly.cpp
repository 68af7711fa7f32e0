#include "doctest.h"
#include "speccert/factorize.hpp"
#include "speccert/parser.hpp"

using namespace speccert;

namespace {
Poly P(const std::string& s) { return parse_expr(s, "t").num(); }

uint64_t state = 0x13198a2e03707344ULL;
long rnd(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 11) % static_cast<uint64_t>(hi - lo + 1));
}
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly t = Poly::variable("t");
    CHECK((t + Poly::constant(1)) * (t - Poly::constant(1)) == P("t^2-1"));
    CHECK(P("t^3-t").derivative() == P("3*t^2-1"));
    CHECK(P("t^2+3*t+2").eval(Rat(-1)) == 0);
    CHECK(P("2*t+4").content() == 2);
    CHECK(P("2*t+4").primitive_part() == P("t+2"));
    CHECK(P("3*t-6").monic() == P("t-2"));
    CHECK(P("-4*t+2").content() == -2);  // content carries the sign of the lc
}

TEST_CASE("division and gcd") {
    PolyDivRem qr = divrem(P("t^3+1"), P("t+1"));
    CHECK(qr.quot == P("t^2-t+1"));
    CHECK(qr.rem.is_zero());
    CHECK(poly_gcd(P("t^4-1"), P("t^2-1")) == P("t^2-1"));
    CHECK(poly_gcd(P("t^2+1"), P("t^2-1")) == P("1"));
    CHECK_THROWS(div_exact(P("t^2+1"), P("t+1")));
}

TEST_CASE("squarefree decomposition and square detection") {
    auto parts = squarefree_decomposition(P("t^4-t^2"));  // t^2 (t-1)(t+1)
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair<Poly, unsigned>(P("t^2-1"), 1));
    CHECK(parts[1] == std::pair<Poly, unsigned>(P("t"), 2));
    CHECK(squarefree_part(P("t^4-t^2")) == P("t^2-1"));
    CHECK(poly_is_square(P("t^2+2*t+1")));
    CHECK(poly_is_square(P("4*t^2")));
    CHECK_FALSE(poly_is_square(P("t^2+1")));
    CHECK_FALSE(poly_is_square(P("-t^2")));
}

TEST_CASE("rational roots") {
    std::vector<Rat> r = rational_roots(P("2*t^3-3*t^2-3*t+2"));  // roots -1, 1/2, 2
    CHECK(r == std::vector<Rat>({Rat(-1), Rat(1, 2), Rat(2)}));
    CHECK(rational_roots(P("t^2+1")).empty());
    CHECK(rational_roots(P("t^2")) == std::vector<Rat>({Rat(0)}));
}

TEST_CASE("factor_z on small fixtures") {
    PolyFactorization f = factor_z(P("t^4-t^2"));
    CHECK(f.unit == 1);
    CHECK(f.content_primes.empty());
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Poly, unsigned>(P("t-1"), 1));
    CHECK(f.factors[1] == std::pair<Poly, unsigned>(P("t"), 2));
    CHECK(f.factors[2] == std::pair<Poly, unsigned>(P("t+1"), 1));

    PolyFactorization g = factor_z(P("6*t"));
    CHECK(g.unit == 1);
    REQUIRE(g.content_primes.size() == 2);
    CHECK(g.content_primes[0].first == 2);
    CHECK(g.content_primes[1].first == 3);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == P("t"));

    // rational content contributes denominator primes
    Poly sixth = Poly("t", {Rat(1, 6), Rat(1, 6)});  // (t+1)/6
    PolyFactorization h = factor_z(sixth);
    CHECK(h.unit == 1);
    REQUIRE(h.content_primes.size() == 2);
    CHECK(h.content_primes[0] == std::pair<Int, int>(Int(2), -1));
    CHECK(h.content_primes[1] == std::pair<Int, int>(Int(3), -1));
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].first == P("t+1"));
    CHECK(h.reconstruct() == sixth);
}

TEST_CASE("factor_z irreducibles stay whole") {
    for (const char* s : {"t^2+1", "t^2-t+1", "3*t^2-4", "3*t^2-1", "t^4+1",
                          "t^2+2*t-1", "4*t^2-6*t+5"}) {
        PolyFactorization f = factor_z(P(s));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].second == 1);
        CHECK(f.reconstruct() == P(s));
    }
}

TEST_CASE("factor_z of the transferred-model discriminant") {
    // Delta of Y^2 = X^3 - (a-a^3)^2 X + (a-a^3)^4 over Q(alpha)
    Poly A = parse_expr("-(alpha-alpha^3)^2", "alpha").num();
    Poly B = parse_expr("(alpha-alpha^3)^4", "alpha").num();
    Poly delta = (A * A * A * Rat(4) + B * B * Rat(27)) * Rat(-16);
    PolyFactorization f = factor_z(delta);
    CHECK(f.unit == -1);
    REQUIRE(f.content_primes.size() == 1);
    CHECK(f.content_primes[0] == std::pair<Int, int>(Int(2), 4));
    REQUIRE(f.factors.size() == 5);
    auto has = [&](const char* s, unsigned e) {
        Poly w = parse_expr(s, "alpha").num();
        for (const auto& [g, ex] : f.factors)
            if (g == w && ex == e) return true;
        return false;
    };
    CHECK(has("alpha", 6));
    CHECK(has("alpha-1", 6));
    CHECK(has("alpha+1", 6));
    CHECK(has("3*alpha^2-4", 1));
    CHECK(has("3*alpha^2-1", 2));
    CHECK(f.reconstruct() == delta);
}

TEST_CASE("factor_z reconstruction on random polynomials") {
    for (int i = 0; i < 220; ++i) {
        int deg = 1 + static_cast<int>(rnd(0, 9));
        std::vector<Rat> cs(deg + 1);
        for (int j = 0; j <= deg; ++j) cs[j] = Rat(rnd(-1000, 1000));
        if (sgn(cs[deg]) == 0) cs[deg] = 1;
        Poly p("t", cs);
        PolyFactorization f = factor_z(p);
        CHECK(f.reconstruct() == p);
        for (const auto& [g, e] : f.factors) {
            CHECK(e >= 1);
            CHECK(g.degree() >= 1);
            CHECK(g.content() == 1);
        }
    }
}
