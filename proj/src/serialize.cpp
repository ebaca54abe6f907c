#include "padicore/serialize.hpp"

namespace padicore {

OrderedJson big_json(const BigInt& n) {
    static const BigInt lo = std::numeric_limits<int64_t>::min();
    static const BigInt hi = std::numeric_limits<int64_t>::max();
    if (n >= lo && n <= hi) return static_cast<int64_t>(n);
    return n.str();
}

OrderedJson side_json(const Side& s) {
    OrderedJson j;
    j["from"] = {s.from.x, s.from.y};
    j["to"] = {s.to.x, s.to.y};
    j["slope"] = s.slope_str();
    j["length"] = s.length();
    j["height"] = s.height();
    j["degree"] = s.degree();
    if (s.slope.num < 0) {
        j["h"] = s.h();
        j["e"] = s.e();
    }
    return j;
}

OrderedJson polygon_json(const NewtonPolygon& np) {
    OrderedJson j;
    j["points"] = OrderedJson::array();
    for (const Point& q : np.points) j["points"].push_back({q.x, q.y});
    j["vertices"] = OrderedJson::array();
    for (const Point& q : np.vertices) j["vertices"].push_back({q.x, q.y});
    j["sides"] = OrderedJson::array();
    for (const Side& s : np.sides) j["sides"].push_back(side_json(s));
    j["principal_sides"] = OrderedJson::array();
    for (const Side& s : np.principal) j["principal_sides"].push_back(side_json(s));
    return j;
}

OrderedJson polygon_report_json(const IntPoly& F, const IntPoly& phi, const BigInt& p,
                                uint64_t seed) {
    PhiExpansion e = phi_expand(F, phi, p);
    NewtonPolygon np = newton_polygon(e);
    OrderedJson j;
    j["schema"] = "padicore.polygon/1";
    j["F"] = F.str();
    j["phi"] = phi.str();
    j["p"] = big_json(p);
    j["valuations"] = OrderedJson::array();
    for (size_t i = 0; i < e.terms.size(); ++i) {
        PAdicVal u = e.u(i);
        j["valuations"].push_back(u.is_infinity() ? OrderedJson(nullptr)
                                                  : OrderedJson(u.value()));
    }
    j["polygon"] = polygon_json(np);
    j["residuals"] = OrderedJson::array();
    for (const Side& s : np.principal) {
        ResidualPoly r = residual_poly(e, s);
        OrderedJson rj;
        rj["side"] = side_json(s);
        rj["poly"] = r.poly.str();
        rj["factors"] = OrderedJson::array();
        for (const auto& [psi, m] : fq_factor(r.poly, seed))
            rj["factors"].push_back({{"psi", psi.str()}, {"mult", m}});
        j["residuals"].push_back(rj);
    }
    j["ind_phi"] = phi.degree() * principal_lattice_count(np);
    return j;
}

OrderedJson ore_report_json(const OreReport& rep) {
    OrderedJson j;
    j["schema"] = "padicore.ore/1";
    j["F"] = rep.F.str();
    j["p"] = big_json(rep.p);
    j["factors"] = OrderedJson::array();
    for (const PhiAnalysis& a : rep.factors) {
        OrderedJson aj;
        aj["phi"] = a.phi.str();
        aj["multiplicity"] = a.multiplicity;
        if (a.exact_divisor) aj["exact_divisor"] = true;
        if (a.refined) aj["center"] = big_json(a.center);
        aj["polygon"] = polygon_json(a.polygon);
        aj["sides"] = OrderedJson::array();
        for (const SideAnalysis& sa : a.sides) {
            OrderedJson sj;
            sj["side"] = side_json(sa.side);
            sj["residual"] = sa.residual.poly.str();
            sj["factors"] = OrderedJson::array();
            for (const ResidualFactor& rf : sa.factors)
                sj["factors"].push_back({{"psi", rf.psi.str()}, {"mult", rf.mult}});
            sj["squarefree"] = sa.squarefree;
            aj["sides"].push_back(sj);
        }
        aj["regular"] = a.regular;
        aj["ind"] = a.ind;
        j["factors"].push_back(aj);
    }
    j["index_lower_bound"] = rep.index_lower_bound;
    j["p_regular"] = rep.p_regular;
    j["shapes"] = OrderedJson::array();
    for (const Shape& s : rep.shapes)
        j["shapes"].push_back(
            {{"e", s.e}, {"f", s.f}, {"count", s.count}, {"certain", s.certain}});
    return j;
}

OrderedJson verdict_json(const IndexDivisorVerdict& v) {
    OrderedJson j;
    j["schema"] = "padicore.verdict/1";
    j["p"] = big_json(v.p);
    j["divides"] = verdict_str(v.divides);
    if (v.witness_f) {
        j["witness_f"] = *v.witness_f;
        j["P_f"] = big_json(v.P_f);
        j["N_f"] = big_json(v.N_f);
    }
    j["trace"] = v.trace;
    return j;
}

OrderedJson quintic_json(const QuinticVerdict& v) {
    OrderedJson j;
    j["schema"] = "padicore.quintic/1";
    j["a"] = big_json(v.a);
    j["b"] = big_json(v.b);
    j["irreducible"] = v.irreducible;
    if (v.irreducible) {
        j["p2"] = {{"condition", tag_str(v.p2_closed.tag)},
                   {"engine", verdict_str(v.p2_engine.divides)}};
        if (v.p2_closed.undetermined) j["p2"]["undetermined"] = true;
        j["p3"] = {{"condition", tag_str(v.p3_closed.tag)},
                   {"engine", verdict_str(v.p3_engine.divides)}};
        if (v.p3_closed.undetermined) j["p3"]["undetermined"] = true;
        j["p_ge_5"] = "no";
        j["consistent"] = v.consistent;
        j["notes"] = v.notes;
    }
    return j;
}

OrderedJson mono_report_json(const MonoFamilyInstance& inst, const MonoCheckReport& rep) {
    OrderedJson j;
    j["schema"] = "padicore.family.mono/1";
    j["p"] = big_json(inst.p);
    j["r"] = inst.r;
    j["v"] = inst.v;
    j["u"] = inst.u;
    j["m"] = inst.m;
    j["a"] = big_json(inst.a);
    j["b"] = big_json(inst.b);
    j["preconditions_ok"] = rep.preconditions_ok;
    j["violations"] = rep.violations;
    if (!rep.preconditions_ok) return j;
    j["F"] = inst.poly().str();
    j["single_side"] = rep.single_side;
    j["side_degree_one"] = rep.side_degree_one;
    j["ind"] = rep.ind;
    j["poly_index_positive"] = rep.poly_index_positive;
    j["theta"] = "alpha^" + rep.theta_x.str() + "/" + inst.p.str() + "^" +
                 rep.theta_y.str();
    j["theta_min_poly"] = rep.theta_min_poly.str();
    j["eisenstein_at_p"] = rep.eisenstein_at_p;
    j["vp_const"] = rep.vp_const;
    j["delta_p"] = big_json(rep.delta_p);
    j["delta_p_squarefree"] = rep.delta_p_squarefree == Sqf::yes
                                  ? "yes"
                                  : (rep.delta_p_squarefree == Sqf::no ? "no" : "unknown");
    return j;
}

OrderedJson dpr_report_json(const BigInt& p, long long r, long long m, const BigInt& a,
                            const BigInt& b, const DprReport& rep) {
    OrderedJson j;
    j["schema"] = "padicore.family.dpr/1";
    j["p"] = big_json(p);
    j["r"] = r;
    j["m"] = m;
    j["a"] = big_json(a);
    j["b"] = big_json(b);
    j["conditions_ok"] = rep.conditions_ok;
    j["violations"] = rep.violations;
    if (!rep.conditions_ok) return j;
    j["side_count"] = rep.side_count;
    j["degree_one_sides"] = rep.degree_one_sides;
    j["predicted_segments_ok"] = rep.predicted_segments_ok;
    j["helper_identity_ok"] = rep.helper_identity_ok;
    j["P1"] = rep.P1;
    j["N1"] = big_json(rep.N1);
    j["common_index_divisor"] = rep.common_index_divisor;
    j["irreducible"] = rep.irreducible == Tri::yes
                           ? "yes"
                           : (rep.irreducible == Tri::no ? "no" : "unknown");
    return j;
}

}  // namespace padicore
