#pragma once

#include <json.hpp>

#include "padicore/families.hpp"
#include "padicore/ore.hpp"
#include "padicore/polygon.hpp"
#include "padicore/quintic.hpp"

namespace padicore {

using OrderedJson = nlohmann::ordered_json;

/// BigInt as a JSON number when it fits in int64, else a decimal string.
OrderedJson big_json(const BigInt& n);

OrderedJson side_json(const Side& s);
OrderedJson polygon_json(const NewtonPolygon& np);

/// Full payload of the polygon command: expansion valuations, vertices,
/// sides with residual polynomials and factorizations, ind_phi.
OrderedJson polygon_report_json(const IntPoly& F, const IntPoly& phi, const BigInt& p,
                                uint64_t seed = 0);

OrderedJson ore_report_json(const OreReport& rep);
OrderedJson verdict_json(const IndexDivisorVerdict& v);
OrderedJson quintic_json(const QuinticVerdict& v);
OrderedJson mono_report_json(const MonoFamilyInstance& inst, const MonoCheckReport& rep);
OrderedJson dpr_report_json(const BigInt& p, long long r, long long m, const BigInt& a,
                            const BigInt& b, const DprReport& rep);

}  // namespace padicore
