#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padicore/polygon.hpp"
#include "padicore/quintic.hpp"
#include "padicore/zx.hpp"

using namespace padicore;

TEST_CASE("phi_expand reads off coefficients for phi = x") {
    PhiExpansion e = phi_expand(quintic_trinomial(7, 11), IntPoly::variable(), 3);
    REQUIRE(e.terms.size() == 6);
    CHECK(e.terms[0] == IntPoly(BigInt(11)));
    CHECK(e.terms[2] == IntPoly(BigInt(7)));
    CHECK(e.terms[5] == IntPoly(BigInt(1)));
    CHECK(e.terms[1].is_zero());
}

TEST_CASE("phi_expand at phi = x + a matches the closed coefficients") {
    // F = phi^5 - 5a phi^4 + 10a^2 phi^3 + (a-10a^3) phi^2
    //     + (-2a^2+5a^4) phi + (b+a^3-a^5)
    for (long long a : {2, 7, -5}) {
        for (long long b : {21, -9}) {
            IntPoly F = quintic_trinomial(a, b);
            PhiExpansion e = phi_expand(F, IntPoly({a, 1}), 3);
            BigInt A(a), B(b);
            REQUIRE(e.terms.size() == 6);
            CHECK(e.terms[0] == IntPoly(B + A * A * A - pow_big(A, 5)));
            CHECK(e.terms[1] == IntPoly(-2 * A * A + 5 * pow_big(A, 4)));
            CHECK(e.terms[2] == IntPoly(A - 10 * A * A * A));
            CHECK(e.terms[3] == IntPoly(10 * A * A));
            CHECK(e.terms[4] == IntPoly(-5 * A));
            CHECK(e.terms[5] == IntPoly(BigInt(1)));
        }
    }
}

TEST_CASE("phi_expand at phi = x + 2^k: constant term") {
    for (long long k : {1, 2, 3}) {
        BigInt a = 3, b = 48;
        IntPoly F = quintic_trinomial(a, b);
        PhiExpansion e = phi_expand(F, IntPoly({pow_big(2, k), 1}), 2);
        CHECK(e.terms[0] ==
              IntPoly(b + a * pow_big(2, 2 * k) - pow_big(2, 5 * k)));
    }
}

TEST_CASE("phi_expand reconstructs F and rejects bad phi") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 60; ++i) {
        IntPoly F = oracles::random_monic(rng, 5 + (i % 3), 50);
        IntPoly phi = oracles::random_monic(rng, 1 + (i % 2), 6);
        PhiExpansion e = phi_expand(F, phi, 2);
        IntPoly sum, power((BigInt(1)));
        for (const IntPoly& t : e.terms) {
            sum += t * power;
            power = power * phi;
            if (!t.is_zero()) CHECK(t.degree() < phi.degree());
        }
        CHECK(sum == F);
    }
    CHECK_THROWS_AS(phi_expand(quintic_trinomial(1, 1), IntPoly({1, 2}), 2),
                    std::invalid_argument);
}

TEST_CASE("newton polygon of the Figure-1 points") {
    NewtonPolygon np = NewtonPolygon::from_points(
        {{0, 5}, {1, 3}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 1}, {9, 0}});
    REQUIRE(np.vertices.size() == 4);
    CHECK(np.vertices[0] == Point{0, 5});
    CHECK(np.vertices[1] == Point{1, 3});
    CHECK(np.vertices[2] == Point{5, 1});
    CHECK(np.vertices[3] == Point{9, 0});
    REQUIRE(np.principal.size() == 3);
    CHECK(np.principal[0].slope == Slope{-2, 1});
    CHECK(np.principal[1].slope == Slope{-1, 2});
    CHECK(np.principal[2].slope == Slope{-1, 4});
    CHECK(principal_lattice_count(np) == 9);
}

TEST_CASE("Eisenstein-shaped polygon is a single side") {
    // u_0 = 1, middle u_i >= 1, u_n = 0
    IntPoly F({6, 4, 2, 1});  // 3-Eisenstein-like at p = 2
    NewtonPolygon np = newton_polygon(phi_expand(F, IntPoly::variable(), 2));
    REQUIRE(np.principal.size() == 1);
    CHECK(np.principal[0].from == Point{0, 1});
    CHECK(np.principal[0].to == Point{3, 0});
    CHECK(np.principal[0].degree() == 1);
    CHECK(principal_lattice_count(np) == 0);
}

TEST_CASE("x^5+3x^2+144 at p=2: principal part (0,4)-(2,0)") {
    PhiExpansion e = phi_expand(quintic_trinomial(3, 144), IntPoly::variable(), 2);
    CHECK(e.u(0) == PAdicVal(4));
    CHECK(e.u(1).is_infinity());
    CHECK(e.u(2) == PAdicVal(0));
    NewtonPolygon np = newton_polygon(e);
    REQUIRE(np.principal.size() == 1);
    CHECK(np.principal[0].from == Point{0, 4});
    CHECK(np.principal[0].to == Point{2, 0});
    CHECK(np.principal[0].slope == Slope{-2, 1});
}

TEST_CASE("side data invariants on random polynomials") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 150; ++i) {
        IntPoly F = oracles::random_monic(rng, 4 + (i % 5), 200);
        BigInt p = (i % 2) ? 2 : 3;
        NewtonPolygon np = newton_polygon(phi_expand(F, IntPoly::variable(), p));
        for (size_t j = 0; j + 1 < np.principal.size(); ++j)
            CHECK(np.principal[j].to == np.principal[j + 1].from);
        for (const Side& s : np.principal) {
            CHECK(s.length() == s.e() * s.degree());
            CHECK(s.height() == s.h() * s.degree());
            CHECK(std::gcd(s.h(), s.e()) == 1);
        }
        CHECK(principal_lattice_count(np) == oracles::lattice_count_naive(np));
    }
}

TEST_CASE("translation covariance: polygon of F w.r.t. x-s equals polygon of F(x+s)") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long long> dist(-20, 20);
    for (int i = 0; i < 60; ++i) {
        IntPoly F = oracles::random_monic(rng, 5, 100);
        BigInt s = dist(rng), p = (i % 2) ? 2 : 3;
        NewtonPolygon a = newton_polygon(phi_expand(F, IntPoly({-s, 1}), p));
        NewtonPolygon b = newton_polygon(phi_expand(F.shift(s), IntPoly::variable(), p));
        CHECK(a.vertices == b.vertices);
    }
}

TEST_CASE("residual polynomial: slope -k side of the trinomial at phi = x") {
    // nu_3(b) = 2k, a a unit: side (0,2k)-(2,0) has R = a y^2 + b_3
    IntPoly F = quintic_trinomial(1, 18);  // nu_3(18) = 2, b_3 = 2
    PhiExpansion e = phi_expand(F, IntPoly::variable(), 3);
    NewtonPolygon np = newton_polygon(e);
    REQUIRE(np.principal.size() == 1);
    ResidualPoly r = residual_poly(e, np.principal[0]);
    FqContext f3{3, fp_monomial(3, 1, 1)};
    CHECK(r.poly == fq_poly_from_ints(f3, {2, 0, 1}));  // y^2 + 2, roots +-1
}

TEST_CASE("residual polynomial: degree-1 side is linear") {
    IntPoly F = quintic_trinomial(7, 21);
    PhiExpansion e = phi_expand(F, IntPoly({7, 1}), 3);
    NewtonPolygon np = newton_polygon(e);
    REQUIRE(np.principal.size() == 2);
    CHECK(np.principal[0].from == Point{0, 4});
    CHECK(np.principal[0].to == Point{2, 1});
    CHECK(np.principal[0].degree() == 1);
    ResidualPoly r = residual_poly(e, np.principal[0]);
    CHECK(r.poly.degree() == 1);
    FqContext f3{3, fp_monomial(3, 1, 1)};
    CHECK(r.poly == fq_poly_from_ints(f3, {1, 2}));  // 2y + 1
    CHECK(residual_poly(e, np.principal[1]).poly.degree() == 1);
}

TEST_CASE("residual polynomial: cubic side y^3 + A3 y^2 + C3") {
    // a = 7 (mod 27), b = a^5 - a^3 + 27: single side (0,3)-(3,0) with
    // R = y^3 - y^2 + 1, irreducible over F_3
    IntPoly F = quintic_trinomial(7, 16491);
    PhiExpansion e = phi_expand(F, IntPoly({7, 1}), 3);
    NewtonPolygon np = newton_polygon(e);
    REQUIRE(np.principal.size() == 1);
    CHECK(np.principal[0].from == Point{0, 3});
    CHECK(np.principal[0].to == Point{3, 0});
    ResidualPoly r = residual_poly(e, np.principal[0]);
    FqContext f3{3, fp_monomial(3, 1, 1)};
    CHECK(r.poly == fq_poly_from_ints(f3, {1, 0, -1, 1}));
    CHECK(fq_is_irreducible(r.poly));
}

TEST_CASE("residual endpoints are nonzero and degree equals d") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 120; ++i) {
        IntPoly F = oracles::random_monic(rng, 5, 500);
        BigInt p = (i % 2) ? 2 : 3;
        PhiExpansion e = phi_expand(F, IntPoly::variable(), p);
        if (F.coeff(0) == 0) continue;
        NewtonPolygon np = newton_polygon(e);
        for (const Side& s : np.principal) {
            ResidualPoly r = residual_poly(e, s);
            CHECK(r.poly.degree() == s.degree());
            CHECK_FALSE(r.poly.coeff(0).is_zero());
            CHECK_FALSE(r.poly.coeff(r.poly.degree()).is_zero());
        }
    }
}

TEST_CASE("residual rejects non-principal sides") {
    PhiExpansion e = phi_expand(quintic_trinomial(3, 144), IntPoly::variable(), 2);
    Side fake;
    fake.from = Point{0, 4};
    fake.to = Point{1, 1};
    fake.slope = Slope{-3, 1};
    CHECK_THROWS_AS(residual_poly(e, fake), std::invalid_argument);
}

TEST_CASE("phi_index fixtures") {
    // single side (0,1)-(n,0): no interior lattice points
    CHECK(phi_index(IntPoly({6, 4, 2, 1}), IntPoly::variable(), 2) == 0);
    // single side (0,3)-(2,0): only (1,1)
    CHECK(phi_index(IntPoly({8, 4, 1}), IntPoly::variable(), 2) == 1);
    // x^5+3x^2+144 at p=2: side (0,4)-(2,0) covers (1,1),(1,2)
    CHECK(phi_index(quintic_trinomial(3, 144), IntPoly::variable(), 2) == 2);
    // deg(phi) scaling: phibar must stay irreducible
    IntPoly F = (IntPoly({1, 1, 1}) * IntPoly({1, 1, 1})) + IntPoly(BigInt(4));
    CHECK(phi_index(F, IntPoly({1, 1, 1}), 2) % 2 == 0);
    CHECK_THROWS_AS(phi_index(quintic_trinomial(1, 2), IntPoly({1, 0, 1}), 2),
                    std::invalid_argument);  // x^2+1 = (x+1)^2 mod 2
}

TEST_CASE("polygon JSON and SVG render") {
    NewtonPolygon np = NewtonPolygon::from_points({{0, 5}, {1, 3}, {5, 1}, {9, 0}});
    std::string svg = polygon_svg(np);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}
