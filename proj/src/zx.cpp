#include "padicore/zx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "padicore/ffield.hpp"

namespace padicore {

PAdicVal vp_poly(const IntPoly& f, const BigInt& p) {
    require_prime(p);
    if (f.is_zero()) return PAdicVal::infinity();
    PAdicVal best = PAdicVal::infinity();
    for (const BigInt& c : f.coeffs()) {
        if (c == 0) continue;
        PAdicVal v = vp(c, p);
        if (v < best) best = v;
        if (best == PAdicVal(0)) break;
    }
    return best;
}

namespace {

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    BigInt den = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = v / den;  // exact by Bareiss
            }
            m[i][k] = 0;
        }
        den = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    long long n = f.degree(), m = g.degree();
    if (n == 0) return pow_big(f.leading(), m);
    if (m == 0) return pow_big(g.leading(), n);
    size_t dim = static_cast<size_t>(n + m);
    std::vector<std::vector<BigInt>> s(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (long long r = 0; r < m; ++r)
        for (long long j = 0; j <= n; ++j) s[r][r + j] = f.coeff(n - j);
    for (long long r = 0; r < n; ++r)
        for (long long j = 0; j <= m; ++j) s[m + r][r + j] = g.coeff(m - j);
    return det_bareiss(std::move(s));
}

BigInt discriminant(const IntPoly& f) {
    if (!f.is_monic())
        throw std::invalid_argument("discriminant: polynomial must be monic");
    long long n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    BigInt r = resultant(f, f.derivative());
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

// ---------------------------------------------------------------------------
// Irreducibility over Q.

namespace {

/// All divisors of |n|, n != 0 (positive ones; callers add signs).
std::vector<BigInt> divisors(const BigInt& n) {
    BigInt a = abs(n);
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool has_rational_root(const IntPoly& f) {
    // monic, f(0) != 0: integer roots divide the constant term
    for (const BigInt& d : divisors(f.coeff(0))) {
        if (f(d) == 0 || f(-d) == 0) return true;
    }
    return false;
}

bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

/// Integer roots of a2 x^2 + a1 x + a0, a2 != 0.
std::vector<BigInt> integer_quadratic_roots(const BigInt& a2, const BigInt& a1,
                                            const BigInt& a0) {
    std::vector<BigInt> roots;
    BigInt disc = a1 * a1 - 4 * a2 * a0, r;
    if (!is_perfect_square(disc, r)) return roots;
    for (const BigInt& s : {r, BigInt(-r)}) {
        BigInt num = -a1 + s, den = 2 * a2;
        if (num % den == 0) roots.push_back(num / den);
        if (s == 0) break;
    }
    return roots;
}

/// Exhaustive monic quadratic factor search for monic f of degree 4 or 5
/// with f(0) != 0.
bool has_quadratic_factor(const IntPoly& f) {
    const BigInt f0 = f.coeff(0);
    std::vector<BigInt> divs = divisors(f0);
    if (f.degree() == 4) {
        const BigInt f3 = f.coeff(3), f2 = f.coeff(2), f1 = f.coeff(1);
        for (const BigInt& d : divs) {
            for (const BigInt& v : {d, BigInt(-d)}) {
                BigInt z = f0 / v;
                // u + w = f3, u w = f2 - v - z, u z + v w = f1
                BigInt smn = f2 - v - z, r;
                if (!is_perfect_square(f3 * f3 - 4 * smn, r)) continue;
                for (const BigInt& s : {r, BigInt(-r)}) {
                    BigInt num = f3 + s;
                    if (num % 2 != 0) continue;
                    BigInt u = num / 2, w = f3 - u;
                    if (u * z + v * w == f1) return true;
                    if (s == 0) break;
                }
            }
        }
        return false;
    }
    // degree 5: factor (x^2+ux+v)(x^3+cx^2+dx+e), v e = f0;
    // the x^1 coefficient forces v u^2 + (e - v f4) u + (v f3 - v^2 - f1) = 0.
    const BigInt f4 = f.coeff(4), f3 = f.coeff(3), f1 = f.coeff(1);
    for (const BigInt& d : divs) {
        for (const BigInt& v : {d, BigInt(-d)}) {
            BigInt e = f0 / v;
            for (const BigInt& u :
                 integer_quadratic_roots(v, e - v * f4, v * f3 - v * v - f1)) {
                IntPoly q({v, u, 1});
                if (f.divisible_by_monic(q)) return true;
            }
        }
    }
    return false;
}

/// Sufficient test: single principal side of coprime degree at p certifies
/// irreducibility over Q_p.
bool single_side_coprime(const IntPoly& f, const BigInt& p) {
    long long n = f.degree();
    if (f.coeff(0) == 0) return false;
    PAdicVal u0 = vp(f.coeff(0), p);
    if (u0.value() == 0) return false;
    long long u = u0.value();
    if (std::gcd(n, u) != 1) return false;
    // every (i, u_i) must lie on or above the segment (0,u)-(n,0)
    for (long long i = 1; i < n; ++i) {
        const BigInt& c = f.coeff(static_cast<size_t>(i));
        if (c == 0) continue;
        // need u_i >= u*(n-i)/n, i.e. u_i * n >= u*(n-i)
        long long ui = vp(c, p).value();
        if (ui * n < u * (n - i)) return false;
    }
    return true;
}

std::vector<BigInt> small_prime_factors(BigInt n, long long bound) {
    std::vector<BigInt> out;
    n = abs(n);
    for (BigInt d = 2; d * d <= n && d <= bound; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1 && n <= bound * bound) out.push_back(n);  // leftover must be prime
    return out;
}

bool eisenstein_at(const IntPoly& f, const BigInt& p) {
    long long n = f.degree();
    for (long long i = 0; i < n; ++i)
        if (f.coeff(static_cast<size_t>(i)) % p != 0) return false;
    return f.coeff(0) % (p * p) != 0;
}

}  // namespace

Tri is_irreducible_q(const IntPoly& f) {
    if (!f.is_monic())
        throw std::invalid_argument("is_irreducible_q: polynomial must be monic");
    long long n = f.degree();
    if (n < 1) throw std::invalid_argument("is_irreducible_q: nonconstant required");
    if (n == 1) return Tri::yes;
    if (f.coeff(0) == 0) return Tri::no;  // root 0

    if (n <= 5) {
        if (has_rational_root(f)) return Tri::no;
        if (n <= 3) return Tri::yes;
        return has_quadratic_factor(f) ? Tri::no : Tri::yes;
    }

    // degree > 5: sufficient tests only
    for (int64_t q : {2, 3, 5, 7, 11, 13}) {
        if (fp_is_irreducible(fp_from(f, q))) return Tri::yes;
    }
    std::vector<BigInt> ps = small_prime_factors(f.coeff(0), 100000);
    for (const BigInt& p : ps) {
        if (eisenstein_at(f, p)) return Tri::yes;
        if (single_side_coprime(f, p)) return Tri::yes;
    }
    for (const BigInt& p : ps) {
        // cheap reducibility witnesses: small roots
        if (f(p) == 0 || f(-p) == 0) return Tri::no;
    }
    for (long long r = 0; r <= 100; ++r)
        if (f(r) == 0 || f(-r) == 0) return Tri::no;
    return Tri::unknown;
}

// ---------------------------------------------------------------------------
// Integer matrices: companion, powers, characteristic polynomial.

std::vector<std::vector<BigInt>> companion_matrix(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("companion_matrix: monic, degree >= 1 required");
    size_t n = static_cast<size_t>(f.degree());
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i + 1 < n; ++i) m[i + 1][i] = 1;
    for (size_t i = 0; i < n; ++i) m[i][n - 1] = -f.coeff(i);
    return m;
}

std::vector<std::vector<BigInt>> mat_mul(const std::vector<std::vector<BigInt>>& a,
                                         const std::vector<std::vector<BigInt>>& b) {
    size_t n = a.size();
    std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<std::vector<BigInt>> mat_pow(std::vector<std::vector<BigInt>> m, long long e) {
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    size_t n = m.size();
    std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    while (e > 0) {
        if (e & 1) r = mat_mul(r, m);
        m = mat_mul(m, m);
        e >>= 1;
    }
    return r;
}

IntPoly char_poly(const std::vector<std::vector<BigInt>>& m) {
    size_t n = m.size();
    std::vector<BigInt> cs(n + 1, BigInt(0));
    cs[n] = 1;
    std::vector<std::vector<BigInt>> a = m;
    for (size_t k = 1; k <= n; ++k) {
        BigInt tr = 0;
        for (size_t i = 0; i < n; ++i) tr += a[i][i];
        if (tr % static_cast<long long>(k) != 0)
            throw std::logic_error("char_poly: inexact trace division");
        BigInt c = -tr / static_cast<long long>(k);
        cs[n - k] = c;
        if (k < n) {
            for (size_t i = 0; i < n; ++i) a[i][i] += c;
            a = mat_mul(m, a);
        }
    }
    return IntPoly(std::move(cs));
}

}  // namespace padicore
