#pragma once

#include <string>
#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/intpoly.hpp"
#include "padicore/polygon.hpp"
#include "padicore/zx.hpp"

namespace padicore {

/// Instance of the family F = x^{p^r} + p^v a x^m + p^u b with
/// p not dividing a*b*u, 2 <= u <= v, 1 <= m < p^r.  F is then irreducible,
/// p divides every (Z_K : Z[alpha]) for alpha a root of F, and
/// theta = alpha^x / p^y is a power integral basis generator whenever the
/// p-free part of disc F is squarefree.
struct MonoFamilyInstance {
    BigInt p;
    long long r = 1, v = 2, u = 2, m = 1;
    BigInt a = 1, b = 1;

    long long degree() const;                 // p^r (guarded)
    IntPoly poly() const;                     // F
    std::vector<std::string> violations() const;
    std::pair<BigInt, BigInt> bezout() const; // (x, y): x u - y p^r = 1, 0 <= x < p^r
};

enum class Sqf { yes, no, unknown };

struct MonoCheckReport {
    bool preconditions_ok = false;
    std::vector<std::string> violations;
    bool single_side = false;       // N_phi(F) at phi = x is one segment (0,u)-(p^r,0)
    bool side_degree_one = false;   // gcd(u, p^r) = 1, so F is irreducible over Q_p
    long long ind = 0;              // ind_x(F)
    bool poly_index_positive = false;
    BigInt theta_x, theta_y;        // theta = alpha^theta_x / p^theta_y
    IntPoly theta_min_poly;
    bool eisenstein_at_p = false;
    long long vp_const = 0;         // vp of the constant term of the minimal polynomial
    BigInt delta_p;                 // p-free part of disc F
    Sqf delta_p_squarefree = Sqf::unknown;
};

MonoCheckReport mono_family_check(const MonoFamilyInstance& inst,
                                  long long trial_bound = 1000000);

/// Minimal polynomial of alpha^x_exp / p^y_pow over Q, computed exactly via
/// the characteristic polynomial of the companion-matrix power; throws if the
/// scaled coefficients are not integers.
IntPoly theta_minpoly(const IntPoly& F, long long x_exp, long long y_pow,
                      const BigInt& p);

struct DprReport {
    bool conditions_ok = false;
    std::vector<std::string> violations;
    long long side_count = 0;          // principal sides at phi = x + b
    long long degree_one_sides = 0;
    bool predicted_segments_ok = false;  // (p^{r-j-1}, j+1)-(p^{r-j}, j), j < p
    bool helper_identity_ok = false;     // vp((-b)^{p^k} + b) = vp(b^{p-1} - 1)
    long long P1 = 0;
    BigInt N1 = 0;
    bool common_index_divisor = false;   // P1 > N1 (conditional on irreducibility)
    Tri irreducible = Tri::unknown;
};

/// Family of Theorem-type "p^{p+1} | a, b^{p-1} = 1 (mod p^{p+1}), r >= p":
/// the polygon at phi = x + b shows at least p+1 degree-1 sides, so
/// P_1 >= p+1 > N_1 = p and p divides i(K).
DprReport dpr_family_check(const BigInt& p, long long r, long long m, const BigInt& a,
                           const BigInt& b);

}  // namespace padicore
