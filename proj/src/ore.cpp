#include "padicore/ore.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "padicore/zx.hpp"

namespace padicore {

namespace {

int64_t to_small_prime(const BigInt& p) {
    require_prime(p);
    if (p > 1000000)
        throw std::invalid_argument("analysis prime too large: " + p.str());
    return static_cast<int64_t>(p);
}

bool is_separable(const IntPoly& F) {
    // quick modular certificate first, exact discriminant as fallback
    static const int64_t qs[] = {1000003, 1000033, 1000037, 1000039, 1000081,
                                 1000099, 1000117, 1000121, 1000133, 1000151};
    for (int64_t q : qs) {
        FpPoly fq = fp_from(F, q);
        if (fq.degree() != F.degree()) continue;
        if (fp_gcd(fq, fp_derivative(fq)).degree() == 0) return true;
    }
    return discriminant(F) != 0;
}

std::string side_str(const Side& s) {
    std::ostringstream out;
    out << "(" << s.from.x << "," << s.from.y << ")->(" << s.to.x << "," << s.to.y
        << ") slope " << s.slope_str();
    return out.str();
}

}  // namespace

bool dedekind_divides_index(const IntPoly& F, const BigInt& p, uint64_t seed) {
    if (!F.is_monic() || F.degree() < 1)
        throw std::invalid_argument("dedekind: monic nonconstant polynomial required");
    int64_t p64 = to_small_prime(p);
    auto factors = fp_factor(fp_from(F, p64), seed);
    IntPoly prod((BigInt(1)));
    for (const auto& [phib, l] : factors) {
        IntPoly lifted = fp_lift(phib);
        for (int i = 0; i < l; ++i) prod = prod * lifted;
    }
    IntPoly M = (F - prod).exact_div_scalar(p);
    FpPoly mbar = fp_from(M, p64);
    for (const auto& [phib, l] : factors) {
        if (l < 2) continue;
        if (mbar.is_zero() || fp_mod(mbar, phib).is_zero()) return true;
    }
    return false;
}

PhiAnalysis analyze_phi(const IntPoly& F, const BigInt& p, const IntPoly& phi,
                        uint64_t seed) {
    PhiAnalysis a;
    a.phi = phi;
    PhiExpansion e = phi_expand(F, phi, p);
    a.exact_divisor = !e.terms.empty() && e.terms[0].is_zero();
    a.polygon = newton_polygon(e);
    a.ind = phi.degree() * principal_lattice_count(a.polygon);
    for (size_t i = 0; i < e.terms.size(); ++i) {
        if (e.u(i) == PAdicVal(0)) {
            a.multiplicity = static_cast<int>(i);
            break;
        }
    }
    for (const Side& s : a.polygon.principal) {
        SideAnalysis sa;
        sa.side = s;
        sa.residual = residual_poly(e, s);
        for (const auto& [psi, m] : fq_factor(sa.residual.poly, seed)) {
            sa.factors.push_back(ResidualFactor{psi, m});
            if (m > 1) sa.squarefree = false;
        }
        a.regular = a.regular && sa.squarefree;
        a.sides.push_back(std::move(sa));
    }
    return a;
}

OreReport ore_analysis(const IntPoly& F, const BigInt& p, uint64_t seed) {
    if (!F.is_monic() || F.degree() < 1)
        throw std::invalid_argument("ore_analysis: monic nonconstant polynomial required");
    if (!is_separable(F))
        throw std::invalid_argument("ore_analysis: polynomial is not separable");
    int64_t p64 = to_small_prime(p);

    OreReport rep;
    rep.p = p;
    rep.F = F;
    for (const auto& [phib, l] : fp_factor(fp_from(F, p64), seed)) {
        PhiAnalysis a = analyze_phi(F, p, fp_lift(phib), seed);
        a.multiplicity = l;
        rep.index_lower_bound += a.ind;
        rep.p_regular = rep.p_regular && a.regular;
        rep.factors.push_back(std::move(a));
    }
    // shape multiset; complete iff p-regular
    std::map<std::tuple<long long, long long, bool>, long long> acc;
    for (const PhiAnalysis& a : rep.factors) {
        long long dphi = a.phi.degree();
        if (a.exact_divisor) acc[{1, dphi, true}] += 1;
        for (const SideAnalysis& sa : a.sides)
            for (const ResidualFactor& rf : sa.factors)
                acc[{sa.side.e(), dphi * rf.psi.degree(), rf.mult == 1}] += 1;
    }
    for (const auto& [key, count] : acc)
        rep.shapes.push_back(
            Shape{std::get<0>(key), std::get<1>(key), count, std::get<2>(key)});
    return rep;
}

RegularizeResult regularize_linear(const IntPoly& F, const BigInt& p, const BigInt& u,
                                   uint64_t seed) {
    RegularizeResult res;
    int64_t p64 = to_small_prime(p);
    if (!F.is_monic() || F.degree() < 1) {
        res.failure = "monic nonconstant polynomial required";
        return res;
    }
    FpPoly fbar = fp_from(F, p64);
    int64_t u0 = static_cast<int64_t>(mod_floor(u, p));
    if (fp_eval(fbar, u0) != 0)
        throw std::invalid_argument("regularize_linear: x - u does not divide Fbar");

    BigInt disc = discriminant(F);
    if (disc == 0) {
        res.failure = "polynomial is not separable";
        return res;
    }
    long long cap = vp(disc, p).value() / 2 + 1;

    BigInt s = u;
    long long prev_ind = -1;
    for (int iter = 0;; ++iter) {
        res.iterations = iter;
        IntPoly phi({-s, 1});
        if (F(s) == 0) {
            res.failure = "center " + s.str() + " is a rational root of F";
            return res;
        }
        PhiAnalysis a = analyze_phi(F, p, phi, seed);
        if (a.regular) {
            a.refined = iter > 0;
            a.center = s;
            res.ok = true;
            res.s = s;
            res.analysis = std::move(a);
            return res;
        }
        if (iter > 0 && a.ind <= prev_ind) {
            res.failure = "phi-index did not increase at center " + s.str();
            return res;
        }
        prev_ind = a.ind;
        if (iter >= cap) {
            res.failure = "iteration bound vp(disc)/2 exceeded";
            return res;
        }
        // exactly one irregular side with one repeated linear factor on an
        // integer slope is within reach of first-order recentering
        const SideAnalysis* bad = nullptr;
        for (const SideAnalysis& sa : a.sides) {
            if (sa.squarefree) continue;
            if (bad != nullptr) {
                res.failure = "several irregular sides at center " + s.str();
                return res;
            }
            bad = &sa;
        }
        if (bad->side.e() != 1) {
            res.failure = "repeated residual factor on non-integer slope " +
                          bad->side.slope_str();
            return res;
        }
        const ResidualFactor* rep = nullptr;
        for (const ResidualFactor& rf : bad->factors) {
            if (rf.mult < 2) continue;
            if (rep != nullptr) {
                res.failure = "several repeated residual factors on one side";
                return res;
            }
            rep = &rf;
        }
        if (rep->psi.degree() != 1) {
            res.failure = "repeated residual factor of degree " +
                          std::to_string(rep->psi.degree()) + " needs higher order";
            return res;
        }
        // psi = y - t over F_p (phi linear, so F_phi = F_p)
        FpPoly c0 = rep->psi.coeff(0);
        int64_t t = c0.is_zero() ? 0 : (p64 - c0.c[0]) % p64;
        if (t == 0) {
            res.failure = "repeated factor with zero root";  // vertex coefficient rules this out
            return res;
        }
        s += BigInt(t) * pow_big(p, bad->side.h());
    }
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "undetermined";
    }
}

IndexDivisorVerdict index_divisor_verdict(const IntPoly& F, const BigInt& p,
                                          uint64_t seed) {
    IndexDivisorVerdict v;
    v.p = p;
    if (!F.is_monic() || F.degree() < 1)
        throw std::invalid_argument("index_divisor_verdict: monic nonconstant required");
    long long n = F.degree();

    std::vector<BigInt> nf(n + 1);
    for (long long f = 1; f <= n; ++f) nf[f] = count_monic_irreducibles(p, f);

    bool pigeon = true;
    for (long long f = 1; f <= n && pigeon; ++f)
        if (BigInt(n / f) > nf[f]) pigeon = false;
    if (pigeon) {
        v.divides = Verdict::no;
        v.trace.push_back("pigeonhole: P_f <= floor(" + std::to_string(n) +
                          "/f) <= N_f for every f <= " + std::to_string(n));
        return v;
    }

    OreReport rep = ore_analysis(F, p, seed);
    bool complete = true;
    for (PhiAnalysis& a : rep.factors) {
        if (a.regular) continue;
        if (a.phi.degree() != 1) {
            complete = false;
            v.trace.push_back("phi=" + a.phi.str() +
                              ": irregular residual over a nonlinear phi, beyond "
                              "first-order refinement");
            continue;
        }
        BigInt u = mod_floor(-a.phi.coeff(0), p);
        RegularizeResult rr = regularize_linear(F, p, u, seed);
        if (rr.ok) {
            int l = a.multiplicity;
            a = rr.analysis;
            a.multiplicity = l;
            v.trace.push_back("phi=x-" + u.str() + " recentered to x-(" + rr.s.str() +
                              ") after " + std::to_string(rr.iterations) + " step(s)");
        } else {
            complete = false;
            v.trace.push_back("phi=x-" + u.str() + ": refinement failed: " + rr.failure);
        }
    }

    std::map<long long, long long> counts;  // certain primes per residue degree
    for (const PhiAnalysis& a : rep.factors) {
        long long dphi = a.phi.degree();
        if (a.exact_divisor) {
            counts[dphi] += 1;
            v.trace.push_back("phi=" + a.phi.str() +
                              " divides F exactly: prime (e=1,f=" + std::to_string(dphi) +
                              ")");
        }
        for (const SideAnalysis& sa : a.sides) {
            for (const ResidualFactor& rf : sa.factors) {
                if (rf.mult == 1) {
                    long long f = dphi * rf.psi.degree();
                    counts[f] += 1;
                    v.trace.push_back("phi=" + a.phi.str() + " side " +
                                      side_str(sa.side) + ": factor " + rf.psi.str() +
                                      " -> prime (e=" + std::to_string(sa.side.e()) +
                                      ",f=" + std::to_string(f) + ")");
                } else {
                    complete = false;
                    v.trace.push_back("phi=" + a.phi.str() + " side " +
                                      side_str(sa.side) + ": unresolved factor " +
                                      rf.psi.str() + "^" + std::to_string(rf.mult));
                }
            }
        }
    }

    for (const auto& [f, cnt] : counts) {
        if (f <= n && BigInt(cnt) > nf[f]) {
            v.divides = Verdict::yes;
            v.witness_f = f;
            v.P_f = cnt;
            v.N_f = nf[f];
            v.trace.push_back("P_" + std::to_string(f) + " = " + std::to_string(cnt) +
                              " > N_" + std::to_string(f) + " = " + nf[f].str());
            return v;
        }
    }
    v.divides = complete ? Verdict::no : Verdict::undetermined;
    v.trace.push_back(complete ? "analysis complete: P_f <= N_f for every f"
                               : "analysis incomplete and no certain excess found");
    return v;
}

}  // namespace padicore
