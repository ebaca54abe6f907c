#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/ffield.hpp"
#include "padicore/intpoly.hpp"
#include "padicore/polygon.hpp"

namespace padicore {

/// Dedekind's criterion: true iff p divides (Z_K : Z[alpha]).  Uses
/// M = (F - prod phi_i^{l_i}) / p and tests phibar_i | Mbar for l_i >= 2;
/// independent of the polygon machinery.
bool dedekind_divides_index(const IntPoly& F, const BigInt& p, uint64_t seed = 0);

struct ResidualFactor {
    FqPoly psi;
    int mult = 1;
};

struct SideAnalysis {
    Side side;
    ResidualPoly residual;
    std::vector<ResidualFactor> factors;
    bool squarefree = true;
};

/// Everything first-order analysis knows about one irreducible factor
/// phibar of Fbar, for a chosen monic lift phi.
struct PhiAnalysis {
    IntPoly phi;
    int multiplicity = 0;    // l_i
    bool exact_divisor = false;  // phi | F in Z[x] (expansion term a_0 = 0)
    NewtonPolygon polygon;
    std::vector<SideAnalysis> sides;  // principal sides
    bool regular = true;     // every residual squarefree
    long long ind = 0;       // ind_phi(F)
    bool refined = false;    // produced by linear recentering
    BigInt center;           // s with phi = x - s, when refined
};

struct Shape {
    long long e = 1, f = 1, count = 1;
    bool certain = true;
};

struct OreReport {
    BigInt p;
    IntPoly F;
    std::vector<PhiAnalysis> factors;
    long long index_lower_bound = 0;  // sum of ind_phi_i
    bool p_regular = true;
    std::vector<Shape> shapes;  // complete iff p_regular
};

/// First-order Ore analysis of F at p (no recentering).  F must be monic
/// and separable.
OreReport ore_analysis(const IntPoly& F, const BigInt& p, uint64_t seed = 0);

/// Analysis of a single phi (monic, phibar irreducible dividing Fbar).
PhiAnalysis analyze_phi(const IntPoly& F, const BigInt& p, const IntPoly& phi,
                        uint64_t seed = 0);

struct RegularizeResult {
    bool ok = false;
    BigInt s;                // regular element, s = u (mod p)
    PhiAnalysis analysis;    // analysis w.r.t. phi = x - s when ok
    int iterations = 0;      // recentering steps taken
    std::string failure;     // reason when !ok
};

/// Linear regular-element construction: starting from the repeated linear
/// factor x - u of Fbar, recenter s <- s + t p^k while some integer-slope
/// side carries a repeated linear residual factor (y - t)^m.  Terminates
/// because ind strictly increases and is bounded by vp(disc F)/2.
RegularizeResult regularize_linear(const IntPoly& F, const BigInt& p, const BigInt& u,
                                   uint64_t seed = 0);

enum class Verdict { yes, no, undetermined };
std::string verdict_str(Verdict v);

struct IndexDivisorVerdict {
    BigInt p;
    Verdict divides = Verdict::undetermined;
    std::optional<long long> witness_f;
    BigInt P_f = 0, N_f = 0;
    std::vector<std::string> trace;
};

/// Is p a prime common index divisor of K = Q[x]/(F)?  Counts certain
/// prime-ideal residue degrees (after linear recentering of every repeated
/// linear factor) and compares P_f with N_f.  F must be monic irreducible
/// (caller-asserted).
IndexDivisorVerdict index_divisor_verdict(const IntPoly& F, const BigInt& p,
                                          uint64_t seed = 0);

}  // namespace padicore
