#pragma once

// Independent brute-force oracles used to freeze expected values.  These
// deliberately avoid the library's own computation paths.

#include <random>
#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/ffield.hpp"
#include "padicore/intpoly.hpp"
#include "padicore/polygon.hpp"

namespace oracles {

using padicore::BigInt;
using padicore::FpPoly;
using padicore::IntPoly;

/// Laplace-expansion determinant; fine for n <= 7.
inline BigInt naive_det(const std::vector<std::vector<BigInt>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt det = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        BigInt term = m[0][j] * naive_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

/// Sylvester-matrix resultant via the Laplace determinant (small degrees).
inline BigInt naive_resultant(const IntPoly& f, const IntPoly& g) {
    long long n = f.degree(), m = g.degree();
    std::vector<std::vector<BigInt>> s(n + m, std::vector<BigInt>(n + m, BigInt(0)));
    for (long long r = 0; r < m; ++r)
        for (long long j = 0; j <= n; ++j) s[r][r + j] = f.coeff(n - j);
    for (long long r = 0; r < n; ++r)
        for (long long j = 0; j <= m; ++j) s[m + r][r + j] = g.coeff(m - j);
    return naive_det(s);
}

/// All divisors of |n| (positive), n != 0.
inline std::vector<BigInt> divisors(const BigInt& n) {
    BigInt a = abs(n);
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    return out;
}

/// Exhaustive factor search for monic f of degree <= 5: integer roots among
/// signed divisors of f(0), and monic quadratic factors x^2+ux+v with v a
/// signed divisor of f(0) and u swept over a Mignotte-style range.
inline bool brute_force_reducible(const IntPoly& f) {
    long long n = f.degree();
    if (n <= 1) return false;
    if (f.coeff(0) == 0) return true;
    for (const BigInt& d : divisors(f.coeff(0)))
        if (f(d) == 0 || f(-d) == 0) return true;
    if (n <= 3) return false;
    BigInt norm2 = 0;
    for (const BigInt& c : f.coeffs()) norm2 += c * c;
    BigInt ubound = 2 * (1 + sqrt(norm2));
    for (const BigInt& d : divisors(f.coeff(0))) {
        for (const BigInt& v : {d, BigInt(-d)}) {
            for (BigInt u = -ubound; u <= ubound; ++u) {
                if (f.divmod_monic(IntPoly({v, u, 1})).second.is_zero()) return true;
            }
        }
    }
    return false;
}

/// Lattice points (x, y), x >= 1, y >= 1, on or below the principal polygon,
/// by scanning the whole bounding box with per-side cross products.
inline long long lattice_count_naive(const padicore::NewtonPolygon& np) {
    if (np.principal.empty()) return 0;
    long long xmax = np.principal.back().to.x;
    long long ymax = 0;
    for (const auto& s : np.principal) ymax = std::max(ymax, s.from.y);
    long long count = 0;
    for (long long x = 1; x <= xmax; ++x) {
        for (long long y = 1; y <= ymax; ++y) {
            bool below = false;
            for (const auto& s : np.principal) {
                if (x < s.from.x || x > s.to.x) continue;
                long long dx = s.to.x - s.from.x, dy = s.to.y - s.from.y;
                if (dx * (y - s.from.y) - dy * (x - s.from.x) <= 0) below = true;
            }
            if (below) ++count;
        }
    }
    return count;
}

/// All monic FpPoly of the given degree over F_p.
inline std::vector<FpPoly> all_monic(int64_t p, long long deg) {
    std::vector<FpPoly> out;
    std::vector<int64_t> digits(deg, 0);
    while (true) {
        FpPoly f;
        f.p = p;
        f.c = digits;
        f.c.push_back(1);
        out.push_back(f);
        long long i = 0;
        while (i < deg && ++digits[i] == p) digits[i++] = 0;
        if (i == deg) break;
    }
    return out;
}

/// Irreducibility over F_p by exhaustive trial division.
inline bool is_irreducible_naive(const FpPoly& f) {
    if (f.degree() < 1) return false;
    for (long long d = 1; 2 * d <= f.degree(); ++d)
        for (const FpPoly& g : all_monic(f.p, d))
            if (padicore::fp_mod(f, g).is_zero()) return false;
    return true;
}

inline IntPoly random_monic(std::mt19937_64& rng, long long deg, long long bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    std::vector<BigInt> c(deg + 1);
    for (long long i = 0; i < deg; ++i) c[i] = dist(rng);
    c[deg] = 1;
    return IntPoly(std::move(c));
}

}  // namespace oracles
