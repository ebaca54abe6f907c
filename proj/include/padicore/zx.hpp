#pragma once

#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/intpoly.hpp"

namespace padicore {

/// Minimum of vp over nonzero coefficients; infinity for the zero polynomial.
PAdicVal vp_poly(const IntPoly& f, const BigInt& p);

/// Resultant of f and g, exact (Bareiss elimination on the Sylvester matrix).
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^{n(n-1)/2} Res(f, f') for monic f of degree n >= 1.
BigInt discriminant(const IntPoly& f);

enum class Tri { yes, no, unknown };

/// Irreducibility over Q for monic nonconstant f.  Exact for degree <= 5
/// (rational root test plus quadratic-factor search over divisor pairs of
/// the constant term); for higher degree only sufficient tests run
/// (factorization type mod small primes, Eisenstein, single-side Newton
/// polygon of coprime degree) and the answer may be unknown.
Tri is_irreducible_q(const IntPoly& f);

/// Characteristic polynomial of a square integer matrix (Faddeev-LeVerrier,
/// all divisions exact over Z).
IntPoly char_poly(const std::vector<std::vector<BigInt>>& m);

/// Companion matrix of a monic polynomial of degree >= 1.
std::vector<std::vector<BigInt>> companion_matrix(const IntPoly& f);

std::vector<std::vector<BigInt>> mat_mul(const std::vector<std::vector<BigInt>>& a,
                                         const std::vector<std::vector<BigInt>>& b);
std::vector<std::vector<BigInt>> mat_pow(std::vector<std::vector<BigInt>> m, long long e);

}  // namespace padicore
