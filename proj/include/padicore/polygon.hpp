#pragma once

#include <string>
#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/ffield.hpp"
#include "padicore/intpoly.hpp"

namespace padicore {

/// phi-expansion of F: F = sum terms[i] * phi^i with deg terms[i] < deg phi.
struct PhiExpansion {
    IntPoly F, phi;
    BigInt p;
    std::vector<IntPoly> terms;

    PAdicVal u(size_t i) const;  // vp of terms[i]
};

/// Euclidean division by successive powers of phi; phi must be monic with
/// 1 <= deg phi <= deg F.
PhiExpansion phi_expand(const IntPoly& F, const IntPoly& phi, const BigInt& p);

struct Point {
    long long x = 0, y = 0;
};
bool operator==(Point a, Point b);

/// Exact rational slope num/den, den > 0, reduced.
struct Slope {
    long long num = 0, den = 1;
};
bool operator==(Slope a, Slope b);
bool slope_less(Slope a, Slope b);

struct Side {
    Point from, to;
    Slope slope;

    long long length() const { return to.x - from.x; }  // l
    long long height() const { return from.y - to.y; }  // H, positive on principal sides
    long long degree() const;                            // d = gcd(l, |H|)
    // For a principal side the slope is -h/e with h, e coprime positive.
    long long h() const { return -slope.num; }
    long long e() const { return slope.den; }
    std::string slope_str() const;  // e.g. "-3/2", "-2", "0", "1/4"
};
bool operator==(const Side& a, const Side& b);

struct NewtonPolygon {
    std::vector<Point> points;    // plotted finite points, increasing x
    std::vector<Point> vertices;  // lower convex hull, extreme points only
    std::vector<Side> sides;      // consecutive vertices, ordered by increasing slope
    std::vector<Side> principal;  // the negative-slope sides (N_phi^+)

    static NewtonPolygon from_points(std::vector<Point> pts);
};

NewtonPolygon newton_polygon(const PhiExpansion& e);

/// Lattice points (x, y) with x >= 1, y >= 1 lying on or below the principal
/// part, computed by exact rational height evaluation per column.
long long principal_lattice_count(const NewtonPolygon& np);

/// ind_phi(F) = deg(phi) * principal_lattice_count; phibar must be
/// irreducible over F_p.
long long phi_index(const IntPoly& F, const IntPoly& phi, const BigInt& p);

/// Residual polynomial R_lambda(F) of one principal side, over F_phi.
struct ResidualPoly {
    Side side;
    FqPoly poly;
    long long s = 0, us = 0;  // initial point of the side
};

ResidualPoly residual_poly(const PhiExpansion& e, const Side& side);
ResidualPoly residual_poly(const IntPoly& F, const IntPoly& phi, const BigInt& p,
                           const Side& side);

/// Monotone polyline with markers on the counted lattice points.
std::string polygon_svg(const NewtonPolygon& np);

}  // namespace padicore
