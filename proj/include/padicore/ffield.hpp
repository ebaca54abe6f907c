#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/intpoly.hpp"

namespace padicore {

/// Polynomial over F_p for a machine-word prime p; coefficients reduced
/// into [0, p), no trailing zeros (zero polynomial has empty coeffs).
struct FpPoly {
    int64_t p = 0;
    std::vector<int64_t> c;

    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    int64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    int64_t leading() const { return c.empty() ? 0 : c.back(); }
    bool is_monic() const { return leading() == 1; }
    std::string str(const std::string& var = "x") const;
};

FpPoly fp_from(const IntPoly& f, int64_t p);
FpPoly fp_const(int64_t p, int64_t v);
FpPoly fp_monomial(int64_t p, int64_t coeff, size_t deg);
IntPoly fp_lift(const FpPoly& f);  // coefficients lifted into [0, p)

bool operator==(const FpPoly& a, const FpPoly& b);
bool fp_less(const FpPoly& a, const FpPoly& b);

int64_t inv_mod(int64_t a, int64_t p);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scalar_mul(int64_t s, const FpPoly& a);

struct FpDivMod {
    FpPoly quot, rem;
};
FpDivMod fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_make_monic(const FpPoly& a);
int64_t fp_eval(const FpPoly& a, int64_t x);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted canonically; the unit lc(f) is dropped.  Equal-degree splitting
/// is randomized internally but deterministic for a fixed seed.
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, uint64_t seed = 0);
bool fp_is_irreducible(const FpPoly& f);

/// Number of monic irreducible polynomials of degree f over F_p:
/// (1/f) sum_{d|f} mu(d) p^{f/d}.
BigInt count_monic_irreducibles(const BigInt& p, long long f);

// ---------------------------------------------------------------------------
// Residue fields F_phi = F_p[x]/(phibar) and polynomials over them.
// Elements are represented by their reduced FpPoly representative; every
// operation takes the field context, and mixing contexts is rejected.

struct FqContext {
    int64_t p = 0;
    FpPoly modulus;  // monic, irreducible over F_p

    long long ext_degree() const { return modulus.degree(); }
    BigInt order() const;
};

bool operator==(const FqContext& a, const FqContext& b);

FpPoly fq_reduce(const FqContext& k, const FpPoly& a);
FpPoly fq_add(const FqContext& k, const FpPoly& a, const FpPoly& b);
FpPoly fq_sub(const FqContext& k, const FpPoly& a, const FpPoly& b);
FpPoly fq_mul(const FqContext& k, const FpPoly& a, const FpPoly& b);
FpPoly fq_inv(const FqContext& k, const FpPoly& a);
FpPoly fq_pow(const FqContext& k, FpPoly a, BigInt e);

/// Polynomial over F_phi.
struct FqPoly {
    FqContext ctx;
    std::vector<FpPoly> c;

    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    FpPoly coeff(size_t i) const;
    bool is_monic() const;
    std::string str(const std::string& var = "y") const;
};

FqPoly fq_poly(const FqContext& k, std::vector<FpPoly> coeffs);
FqPoly fq_poly_from_ints(const FqContext& k, const std::vector<int64_t>& coeffs);

bool operator==(const FqPoly& a, const FqPoly& b);
bool fq_poly_less(const FqPoly& a, const FqPoly& b);

FqPoly fq_poly_add(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_sub(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_mul(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_scalar_mul(const FpPoly& s, const FqPoly& a);

struct FqDivMod {
    FqPoly quot, rem;
};
FqDivMod fq_poly_divmod(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_mod(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_gcd(FqPoly a, FqPoly b);  // monic
FqPoly fq_poly_derivative(const FqPoly& a);
FqPoly fq_poly_make_monic(const FqPoly& a);
FqPoly fq_poly_pow_mod(const FqPoly& base, BigInt e, const FqPoly& mod);

std::vector<std::pair<FqPoly, int>> fq_factor(const FqPoly& g, uint64_t seed = 0);
bool is_squarefree(const FqPoly& g);
bool fq_is_irreducible(const FqPoly& g);

}  // namespace padicore
