#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmov/laurent.hpp"

using qmov::LaurentPoly;
using qmov::poly_gcd;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> exp(-6, 6);
    std::uniform_int_distribution<long> coeff(-9, 9);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("printing uses ascending exponents") {
    LaurentPoly p = LaurentPoly::q(-4) + LaurentPoly(2) + LaurentPoly::q(4);
    CHECK(p.str() == "q^-4 + 2 + q^4");
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly(1).str() == "1");
    CHECK(LaurentPoly(-7).str() == "-7");
    CHECK(LaurentPoly::q().str() == "q");
    CHECK((-LaurentPoly::q(3)).str() == "-q^3");
    CHECK(LaurentPoly::monomial(2, -16).str() == "2q^-16");
    LaurentPoly m = LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(3, 1) + LaurentPoly::monomial(-2, 5);
    CHECK(m.str() == "-q^-2 + 3q - 2q^5");
}

TEST_CASE("constants and predicates") {
    CHECK(LaurentPoly().is_zero());
    CHECK(LaurentPoly(1).is_one());
    CHECK(!LaurentPoly::q().is_one());
    CHECK(LaurentPoly::q(2).is_monomial());
    CHECK((LaurentPoly::q() - LaurentPoly::q()).is_zero());
    LaurentPoly p = LaurentPoly::monomial(3, -2) + LaurentPoly::q(5);
    CHECK(p.min_exp() == -2);
    CHECK(p.max_exp() == 5);
    CHECK(p.coeff(-2) == 3);
    CHECK(p.coeff(0) == 0);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 1200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + LaurentPoly() == a);
        CHECK(a * LaurentPoly(1) == a);
        CHECK((a - a).is_zero());
        CHECK(-(-a) == a);
        CHECK(a - b == a + -b);
    }
}

TEST_CASE("shift and scale multiply by monomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly s = a;
        s.shift(3);
        CHECK(s == a * LaurentPoly::q(3));
        LaurentPoly t = a;
        t.scale(-5);
        CHECK(t == a * LaurentPoly(-5));
    }
}

TEST_CASE("bar swaps q and its inverse") {
    LaurentPoly p = LaurentPoly::monomial(2, -3) + LaurentPoly(1) + LaurentPoly::q(5);
    CHECK(p.bar() == LaurentPoly::q(-5) + LaurentPoly(1) + LaurentPoly::monomial(2, 3));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK(a.bar().bar() == a);
    }
}

TEST_CASE("content and primitive part") {
    LaurentPoly p = LaurentPoly::monomial(6, -1) + LaurentPoly::monomial(-9, 2);
    CHECK(p.content() == 3);
    LaurentPoly prim = p.primitive();
    CHECK(prim == LaurentPoly(-2) + LaurentPoly::monomial(3, 3));
    CHECK(prim.min_exp() == 0);
    CHECK(prim.content() == 1);
    CHECK(prim.terms().rbegin()->second > 0);
    CHECK(LaurentPoly().content() == 0);
}

TEST_CASE("exact division recovers known factors") {
    std::mt19937_64 rng(20240812);
    int done = 0;
    while (done < 400) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        LaurentPoly q;
        REQUIRE((a * b).divide_exact(b, &q));
        CHECK(q == a);
        ++done;
    }
    LaurentPoly q;
    CHECK(!(LaurentPoly::q() + LaurentPoly(1)).divide_exact(LaurentPoly(2), &q));
    CHECK(!LaurentPoly(1).divide_exact(LaurentPoly::q() + LaurentPoly(1), &q));
    CHECK((LaurentPoly::q(2) + LaurentPoly::q(-2)).divide_exact(LaurentPoly::q(-2), &q));
    CHECK(q == LaurentPoly::q(4) + LaurentPoly(1));
}

TEST_CASE("polynomial gcd") {
    std::mt19937_64 rng(20240813);
    int done = 0;
    while (done < 200) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), g = random_poly(rng);
        if (g.is_zero()) continue;
        LaurentPoly d = poly_gcd(a * g, b * g);
        if (a.is_zero() && b.is_zero()) continue;
        LaurentPoly q;
        CHECK(d.divide_exact(g.primitive(), &q));
        CHECK((a * g).divide_exact(d, &q));
        CHECK((b * g).divide_exact(d, &q));
        ++done;
    }
    CHECK(poly_gcd(LaurentPoly(), LaurentPoly::monomial(4, 2)) == LaurentPoly(1));
    CHECK(poly_gcd(LaurentPoly::q(3), LaurentPoly::q(-1)) == LaurentPoly(1));
    LaurentPoly f = LaurentPoly::q(2) - LaurentPoly(1);
    LaurentPoly g2 = LaurentPoly::q() - LaurentPoly(1);
    CHECK(poly_gcd(f, g2 * g2) == g2);
}

TEST_CASE("ordering is total and matches equality") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(((a <=> b) == std::strong_ordering::equal) == (a == b));
        if (a < b) CHECK(b > a);
    }
}
