#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padicore/bigint.hpp"
#include "padicore/intpoly.hpp"
#include "padicore/ore.hpp"

namespace padicore {

/// Which closed-form condition decided that p divides i(K) for
/// F = x^5 + a x^2 + b.  Tags 2.1-2.3 are the conditions at p = 2,
/// 3.1-3.5 the conditions at p = 3.
enum class CondTag { none, p2_1, p2_2, p2_3, p3_1, p3_2, p3_3, p3_4, p3_5 };
std::string tag_str(CondTag t);

struct QuinticOptions {
    /// Evaluate the conditions exactly as printed instead of the corrected
    /// reading this module documents (see README, "errata").
    bool verbatim = false;
    uint64_t seed = 0;
};

struct ConditionResult {
    CondTag tag = CondTag::none;
    bool undetermined = false;  // regular-element construction failed
    std::string note;
};

IntPoly quintic_trinomial(const BigInt& a, const BigInt& b);  // x^5 + a x^2 + b

/// Closed-form decision for 2 | i(K); caller asserts irreducibility.
ConditionResult p2_condition(const BigInt& a, const BigInt& b,
                             const QuinticOptions& opts = {});

/// Closed-form decision for 3 | i(K); may invoke the regular-element
/// construction (conditions 3.3-3.5).
ConditionResult p3_condition(const BigInt& a, const BigInt& b,
                             const QuinticOptions& opts = {});

struct QuinticVerdict {
    BigInt a, b;
    bool irreducible = false;
    ConditionResult p2_closed, p3_closed;
    IndexDivisorVerdict p2_engine, p3_engine;
    bool consistent = false;  // closed forms agree with the engine at p = 2 and 3
    std::vector<std::string> notes;
};

/// Full pipeline: irreducibility, closed forms, engine verdicts, and the
/// consistency flag.  Primes p >= 5 never divide i(K) for this family.
QuinticVerdict quintic_verdict(const BigInt& a, const BigInt& b,
                               const QuinticOptions& opts = {});

}  // namespace padicore
