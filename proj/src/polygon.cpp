#include "padicore/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "padicore/zx.hpp"

namespace padicore {

PAdicVal PhiExpansion::u(size_t i) const {
    if (i >= terms.size()) return PAdicVal::infinity();
    return vp_poly(terms[i], p);
}

PhiExpansion phi_expand(const IntPoly& F, const IntPoly& phi, const BigInt& p) {
    if (!phi.is_monic()) throw std::invalid_argument("phi_expand: phi must be monic");
    if (phi.degree() < 1) throw std::invalid_argument("phi_expand: deg phi must be >= 1");
    if (!F.is_zero() && phi.degree() > F.degree())
        throw std::invalid_argument("phi_expand: deg phi must be <= deg F");
    require_prime(p);
    PhiExpansion e;
    e.F = F;
    e.phi = phi;
    e.p = p;
    IntPoly rest = F;
    while (!rest.is_zero()) {
        auto [quot, rem] = rest.divmod_monic(phi);
        e.terms.push_back(rem);
        rest = quot;
    }
    return e;
}

bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

bool operator==(Slope a, Slope b) { return a.num == b.num && a.den == b.den; }

bool slope_less(Slope a, Slope b) { return a.num * b.den < b.num * a.den; }

namespace {
Slope make_slope(Point a, Point b) {
    long long num = b.y - a.y, den = b.x - a.x;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Slope{num / g, den / g};
}
}  // namespace

long long Side::degree() const {
    long long H = height();
    return std::gcd(length(), H < 0 ? -H : H);
}

std::string Side::slope_str() const {
    std::ostringstream out;
    out << slope.num;
    if (slope.den != 1) out << "/" << slope.den;
    return out.str();
}

bool operator==(const Side& a, const Side& b) {
    return a.from == b.from && a.to == b.to;
}

NewtonPolygon NewtonPolygon::from_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(),
              [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    // one point per abscissa
    std::vector<Point> uniq;
    for (const Point& q : pts) {
        if (!uniq.empty() && uniq.back().x == q.x) continue;
        uniq.push_back(q);
    }
    if (uniq.empty())
        throw std::invalid_argument("NewtonPolygon: no finite points");

    NewtonPolygon np;
    np.points = uniq;
    // lower hull, extreme points only
    auto cross = [](Point a, Point b, Point c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    };
    for (const Point& q : uniq) {
        while (np.vertices.size() >= 2 &&
               cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), q) <= 0)
            np.vertices.pop_back();
        np.vertices.push_back(q);
    }
    for (size_t i = 0; i + 1 < np.vertices.size(); ++i) {
        Side s;
        s.from = np.vertices[i];
        s.to = np.vertices[i + 1];
        s.slope = make_slope(s.from, s.to);
        np.sides.push_back(s);
        if (s.slope.num < 0) np.principal.push_back(s);
    }
    return np;
}

NewtonPolygon newton_polygon(const PhiExpansion& e) {
    if (e.F.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    std::vector<Point> pts;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        PAdicVal u = e.u(i);
        if (!u.is_infinity())
            pts.push_back(Point{static_cast<long long>(i), u.value()});
    }
    return NewtonPolygon::from_points(std::move(pts));
}

long long principal_lattice_count(const NewtonPolygon& np) {
    if (np.principal.empty()) return 0;
    long long count = 0;
    long long last = 0;  // columns x <= last are done; x >= 1 only
    for (const Side& s : np.principal) {
        for (long long x = std::max(s.from.x, last + 1); x <= s.to.x; ++x) {
            if (x < 1) continue;
            // floor of the exact height  from.y + num*(x - from.x)/den
            long long num = s.slope.num, den = s.slope.den;
            long long hfloor =
                s.from.y + static_cast<long long>(
                               fdiv(BigInt(num) * (x - s.from.x), BigInt(den)));
            if (hfloor > 0) count += hfloor;
            last = x;
        }
    }
    return count;
}

long long phi_index(const IntPoly& F, const IntPoly& phi, const BigInt& p) {
    FpPoly phibar = fp_from(phi, static_cast<int64_t>(p));
    if (!fp_is_irreducible(phibar))
        throw std::invalid_argument("phi_index: phibar must be irreducible mod p");
    PhiExpansion e = phi_expand(F, phi, p);
    return phi.degree() * principal_lattice_count(newton_polygon(e));
}

ResidualPoly residual_poly(const PhiExpansion& e, const Side& side) {
    NewtonPolygon np = newton_polygon(e);
    bool found = false;
    for (const Side& s : np.principal)
        if (s == side) found = true;
    if (!found)
        throw std::invalid_argument("residual_poly: not a side of the principal polygon");

    int64_t p64 = static_cast<int64_t>(e.p);
    FpPoly phibar = fp_from(e.phi, p64);
    if (!fp_is_irreducible(phibar))
        throw std::invalid_argument("residual_poly: phibar must be irreducible mod p");
    FqContext ctx{p64, phibar};

    long long h = side.h(), ee = side.e(), d = side.degree();
    std::vector<FpPoly> t(d + 1, fp_const(p64, 0));
    for (long long i = 0; i <= d; ++i) {
        size_t j = static_cast<size_t>(side.from.x + i * ee);
        long long expected = side.from.y - i * h;
        PAdicVal uj = e.u(j);
        if (uj.is_infinity() || uj.value() > expected) continue;  // strictly above S
        if (uj.value() < expected)
            throw std::logic_error("residual_poly: point below its own hull");
        IntPoly scaled = e.terms[j].exact_div_scalar(pow_big(e.p, expected));
        t[i] = fq_reduce(ctx, fp_from(scaled, p64));
    }
    ResidualPoly r;
    r.side = side;
    r.s = side.from.x;
    r.us = side.from.y;
    r.poly = fq_poly(ctx, std::move(t));
    if (r.poly.degree() != d || r.poly.coeff(0).is_zero())
        throw std::logic_error("residual_poly: endpoints must contribute");
    return r;
}

ResidualPoly residual_poly(const IntPoly& F, const IntPoly& phi, const BigInt& p,
                           const Side& side) {
    return residual_poly(phi_expand(F, phi, p), side);
}

std::string polygon_svg(const NewtonPolygon& np) {
    long long xmax = 1, ymax = 1;
    for (const Point& q : np.points) {
        xmax = std::max(xmax, q.x);
        ymax = std::max(ymax, q.y);
    }
    const long long unit = 40, margin = 30;
    long long w = xmax * unit + 2 * margin, hgt = ymax * unit + 2 * margin;
    auto X = [&](long long x) { return margin + x * unit; };
    auto Y = [&](long long y) { return hgt - margin - y * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << hgt << "\" viewBox=\"0 0 " << w << " " << hgt << "\">\n";
    out << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax)
        << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0)
        << "\" y2=\"" << Y(ymax) << "\" stroke=\"black\"/>\n";
    for (const Point& q : np.points)
        out << "  <circle cx=\"" << X(q.x) << "\" cy=\"" << Y(q.y)
            << "\" r=\"3\" fill=\"black\"/>\n";
    if (!np.vertices.empty()) {
        out << "  <polyline fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
        for (const Point& v : np.vertices) out << X(v.x) << "," << Y(v.y) << " ";
        out << "\"/>\n";
    }
    // markers on the counted lattice points
    long long last = 0;
    for (const Side& s : np.principal) {
        for (long long x = std::max(s.from.x, last + 1); x <= s.to.x; ++x) {
            if (x < 1) continue;
            long long hfloor =
                s.from.y + static_cast<long long>(
                               fdiv(BigInt(s.slope.num) * (x - s.from.x),
                                    BigInt(s.slope.den)));
            for (long long y = 1; y <= hfloor; ++y) {
                out << "  <path d=\"M" << X(x) - 4 << " " << Y(y) - 4 << " l8 8 M"
                    << X(x) - 4 << " " << Y(y) + 4 << " l8 -8\" stroke=\"red\"/>\n";
            }
            last = x;
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace padicore
