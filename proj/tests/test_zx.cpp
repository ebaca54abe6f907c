#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padicore/quintic.hpp"
#include "padicore/zx.hpp"

using namespace padicore;

TEST_CASE("vp basics") {
    CHECK(vp(0, 3).is_infinity());
    CHECK(vp(48, 2) == PAdicVal(4));
    CHECK(vp(24, 2) == PAdicVal(3));
    CHECK(vp(-54, 3) == PAdicVal(3));
    CHECK_THROWS_AS(vp(10, 4), std::invalid_argument);
}

TEST_CASE("vp is additive and ultrametric") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        BigInt m = dist(rng), n = dist(rng), p = (i % 2) ? 2 : 3;
        if (m == 0 || n == 0) continue;
        CHECK(vp(m * n, p).value() == vp(m, p).value() + vp(n, p).value());
        if (m + n != 0) {
            long long lhs = vp(m + n, p).value();
            CHECK(lhs >= std::min(vp(m, p).value(), vp(n, p).value()));
        }
    }
}

TEST_CASE("p_free_part") {
    CHECK(p_free_part(48, 2) == 3);
    CHECK(p_free_part(-2, 3) == -2);
    CHECK(p_free_part(144, 2) == 9);
    CHECK(144 % 9 == 0);  // 144 = 2^4 * 9 with 2 not dividing 9
    CHECK_THROWS_AS(p_free_part(0, 2), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-100000, 100000);
    for (int i = 0; i < 300; ++i) {
        BigInt n = dist(rng);
        if (n == 0) continue;
        for (BigInt p : {BigInt(2), BigInt(3), BigInt(5)}) {
            BigInt free = p_free_part(n, p);
            CHECK(free % p != 0);
            CHECK(pow_big(p, vp(n, p).value()) * free == n);
        }
    }
}

TEST_CASE("vp_poly") {
    CHECK(vp_poly(IntPoly(), 2).is_infinity());
    CHECK(vp_poly(IntPoly({6, 4}), 2) == PAdicVal(1));
    CHECK(vp_poly(IntPoly({27, 0, 9}), 3) == PAdicVal(2));
}

TEST_CASE("resultant matches Laplace determinant on small instances") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        IntPoly f = oracles::random_monic(rng, 3, 8);
        IntPoly g = oracles::random_monic(rng, 2, 8);
        CHECK(resultant(f, g) == oracles::naive_resultant(f, g));
    }
}

TEST_CASE("discriminant of a quadratic is b^2 - 4c") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int i = 0; i < 100; ++i) {
        BigInt b = dist(rng), c = dist(rng);
        CHECK(discriminant(IntPoly({c, b, 1})) == b * b - 4 * c);
    }
    CHECK_THROWS_AS(discriminant(IntPoly({1, 2})), std::invalid_argument);
}

TEST_CASE("trinomial discriminant identity with one global sign") {
    // disc(x^5 + a x^2 + b) = b (3125 b^3 + 108 a^5); the resultant convention
    // reproduces it with sign +1, pinned by the (1,1) instance
    CHECK(discriminant(quintic_trinomial(1, 1)) == 3233);
    CHECK(discriminant(quintic_trinomial(2, 3)) == 263493);

    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long long> dist(-10000, 10000);
    for (int i = 0; i < 200; ++i) {
        BigInt a = dist(rng), b = dist(rng);
        BigInt expect = b * (3125 * b * b * b + 108 * pow_big(a, 5));
        CHECK(discriminant(quintic_trinomial(a, b)) == expect);
    }
}

TEST_CASE("irreducibility over Q, exact at degree <= 5") {
    CHECK(is_irreducible_q(IntPoly({-53, 0, 0, 0, 0, 1})) == Tri::yes);  // 53-Eisenstein
    CHECK(is_irreducible_q(IntPoly({0, 0, 1, 0, 0, 1})) == Tri::no);     // root 0
    CHECK(is_irreducible_q(quintic_trinomial(3, 144)) == Tri::yes);
    CHECK(is_irreducible_q(IntPoly({1, 0, 0, 0, 0, 1})) == Tri::no);  // x^5+1
    CHECK(is_irreducible_q(IntPoly({4, 4, 1})) == Tri::no);           // (x+2)^2
    // product of two irreducible quadratics: no rational root
    IntPoly f = IntPoly({1, 1, 1}) * IntPoly({3, -1, 1});
    CHECK(is_irreducible_q(f) == Tri::no);
}

TEST_CASE("irreducibility agrees with brute-force factor search") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        long long deg = 2 + static_cast<long long>(rng() % 4);
        IntPoly f = oracles::random_monic(rng, deg, 30);
        bool reducible = oracles::brute_force_reducible(f);
        CAPTURE(f.str());
        CHECK(is_irreducible_q(f) == (reducible ? Tri::no : Tri::yes));
    }
}

TEST_CASE("irreducibility at degree > 5: sufficient tests") {
    // 2-Eisenstein
    CHECK(is_irreducible_q(IntPoly({2, 2, 0, 0, 0, 0, 1})) == Tri::yes);
    // single polygon side of coprime degree at p = 3 (x^9 + 9x + 3)
    IntPoly f = IntPoly::monomial(1, 9) + IntPoly({3, 9});
    CHECK(is_irreducible_q(f) == Tri::yes);
    // obvious root
    IntPoly g = IntPoly({-1, 1}) * (IntPoly::monomial(1, 6) + IntPoly({7, 1, 1}));
    CHECK(is_irreducible_q(g) == Tri::no);
}

TEST_CASE("companion matrix and characteristic polynomial") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        IntPoly f = oracles::random_monic(rng, 2 + (i % 4), 9);
        CHECK(char_poly(companion_matrix(f)) == f);
    }
}

TEST_CASE("shift is evaluation-compatible") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (int i = 0; i < 50; ++i) {
        IntPoly f = oracles::random_monic(rng, 5, 20);
        BigInt t = dist(rng), x = dist(rng);
        CHECK(f.shift(t)(x) == f(x + t));
    }
}
