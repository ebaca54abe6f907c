#include "padicore/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicore/ore.hpp"

namespace padicore {

namespace {

constexpr long long kMaxFamilyDegree = 4096;

long long checked_power_degree(const BigInt& p, long long r) {
    BigInt d = pow_big(p, r);
    if (d > kMaxFamilyDegree)
        throw std::invalid_argument("family instance degree p^r too large");
    return static_cast<long long>(d);
}

}  // namespace

long long MonoFamilyInstance::degree() const { return checked_power_degree(p, r); }

IntPoly MonoFamilyInstance::poly() const {
    long long n = degree();
    IntPoly F = IntPoly::monomial(1, n);
    F += IntPoly::monomial(pow_big(p, v) * a, m);
    F += IntPoly(pow_big(p, u) * b);
    return F;
}

std::vector<std::string> MonoFamilyInstance::violations() const {
    std::vector<std::string> out;
    if (!is_prime(p)) out.push_back("p is not prime");
    if (r < 1) out.push_back("r must be >= 1");
    if (!(2 <= u && u <= v)) out.push_back("need 2 <= u <= v");
    if (a == 0 || a % p == 0) out.push_back("p must not divide a");
    if (b == 0 || b % p == 0) out.push_back("p must not divide b");
    if (BigInt(u) % p == 0) out.push_back("p must not divide u");
    if (out.empty()) {
        long long n = degree();
        if (!(1 <= m && m < n)) out.push_back("need 1 <= m < p^r");
    }
    return out;
}

std::pair<BigInt, BigInt> MonoFamilyInstance::bezout() const {
    BigInt n = pow_big(p, r);
    // smallest x in [0, n) with x*u = 1 (mod n); exists since gcd(u, p) = 1
    BigInt x = 0, found = -1;
    for (BigInt t = 0; t < n; ++t) {
        if (mod_floor(t * u, n) == 1) {
            found = t;
            break;
        }
    }
    if (found < 0) throw std::logic_error("bezout: u not invertible mod p^r");
    x = found;
    BigInt y = (x * u - 1) / n;
    return {x, y};
}

IntPoly theta_minpoly(const IntPoly& F, long long x_exp, long long y_pow,
                      const BigInt& p) {
    if (!F.is_monic() || F.degree() < 1)
        throw std::invalid_argument("theta_minpoly: monic nonconstant F required");
    require_prime(p);
    if (x_exp < 0 || y_pow < 0) throw std::invalid_argument("theta_minpoly: negative exponent");
    long long n = F.degree();
    // characteristic polynomial of multiplication by alpha^x on Q[x]/(F)
    IntPoly h = char_poly(mat_pow(companion_matrix(F), x_exp));
    // g(z) = h(p^y z) / p^{n y}
    std::vector<BigInt> g(n + 1);
    BigInt py = pow_big(p, y_pow);
    for (long long i = 0; i <= n; ++i) {
        BigInt denom = pow_big(py, n - i);
        BigInt num = h.coeff(static_cast<size_t>(i));
        if (num % denom != 0)
            throw std::invalid_argument(
                "theta_minpoly: alpha^x / p^y is not an algebraic integer");
        g[static_cast<size_t>(i)] = num / denom;
    }
    return IntPoly(std::move(g));
}

MonoCheckReport mono_family_check(const MonoFamilyInstance& inst, long long trial_bound) {
    MonoCheckReport rep;
    rep.violations = inst.violations();
    rep.preconditions_ok = rep.violations.empty();
    if (!rep.preconditions_ok) return rep;

    long long n = inst.degree();
    IntPoly F = inst.poly();

    PhiExpansion e = phi_expand(F, IntPoly::variable(), inst.p);
    NewtonPolygon np = newton_polygon(e);
    rep.single_side = np.principal.size() == 1 &&
                      np.principal[0].from == Point{0, inst.u} &&
                      np.principal[0].to == Point{n, 0};
    rep.side_degree_one = rep.single_side && np.principal[0].degree() == 1;
    rep.ind = principal_lattice_count(np);
    rep.poly_index_positive = rep.ind > 0;

    auto [x, y] = inst.bezout();
    rep.theta_x = x;
    rep.theta_y = y;
    rep.theta_min_poly =
        theta_minpoly(F, static_cast<long long>(x), static_cast<long long>(y), inst.p);

    const IntPoly& g = rep.theta_min_poly;
    rep.eisenstein_at_p = true;
    for (long long i = 0; i < n; ++i)
        if (g.coeff(static_cast<size_t>(i)) % inst.p != 0) rep.eisenstein_at_p = false;
    if (g.coeff(0) % (inst.p * inst.p) == 0) rep.eisenstein_at_p = false;
    rep.vp_const = vp(g.coeff(0), inst.p).value();

    // squarefreeness of the p-free part of disc F, by trial division
    BigInt disc = discriminant(F);
    rep.delta_p = p_free_part(disc, inst.p);
    BigInt m = abs(rep.delta_p);
    rep.delta_p_squarefree = Sqf::yes;
    for (BigInt d = 2; d * d <= m && d <= trial_bound; ++d) {
        if (m % d != 0) continue;
        m /= d;
        if (m % d == 0) {
            rep.delta_p_squarefree = Sqf::no;
            return rep;
        }
    }
    if (m > 1 && m > BigInt(trial_bound) * trial_bound) {
        BigInt root = sqrt(m);
        if (root * root == m)
            rep.delta_p_squarefree = Sqf::no;   // square of a prime beyond the bound
        else
            rep.delta_p_squarefree = Sqf::unknown;  // cofactor not fully factored
    }
    return rep;
}

DprReport dpr_family_check(const BigInt& p, long long r, long long m, const BigInt& a,
                           const BigInt& b) {
    DprReport rep;
    if (!is_prime(p) || p == 2) rep.violations.push_back("p must be an odd prime");
    if (rep.violations.empty()) {
        if (r < static_cast<long long>(p))
            rep.violations.push_back("need r >= p");
        BigInt pp1 = pow_big(p, static_cast<long long>(p) + 1);
        if (mod_floor(a, pp1) != 0) rep.violations.push_back("need a = 0 (mod p^{p+1})");
        if (b == 0 || b % p == 0 ||
            mod_floor(pow_big(mod_floor(b, pp1 * p), static_cast<long long>(p) - 1) - 1,
                      pp1) != 0)
            rep.violations.push_back("need b^{p-1} = 1 (mod p^{p+1})");
        long long n = checked_power_degree(p, r);
        if (!(1 <= m && m < n)) rep.violations.push_back("need 1 <= m < p^r");
    }
    rep.conditions_ok = rep.violations.empty();
    if (!rep.conditions_ok) return rep;

    long long n = checked_power_degree(p, r);
    long long pl = static_cast<long long>(p);
    IntPoly F = IntPoly::monomial(1, n);
    F += IntPoly::monomial(a, m);
    F += IntPoly(b);

    // vp((-b)^{p^k} + b) = vp(b^{p-1} - 1) for p not dividing b
    rep.helper_identity_ok = true;
    BigInt rhs_v = vp(pow_big(b, pl - 1) - 1, p).value();
    for (long long k = 1; k <= std::min<long long>(r, 2); ++k) {
        BigInt lhs = pow_big(-b, checked_power_degree(p, k)) + b;
        if (vp(lhs, p).value() != rhs_v) rep.helper_identity_ok = false;
    }

    PhiExpansion e = phi_expand(F, IntPoly({b, 1}), p);
    NewtonPolygon np = newton_polygon(e);
    rep.side_count = static_cast<long long>(np.principal.size());
    for (const Side& s : np.principal)
        if (s.degree() == 1) ++rep.degree_one_sides;

    // the p right-most sides join (p^{r-j-1}, j+1) and (p^{r-j}, j), j = 0..p-1
    rep.predicted_segments_ok = true;
    for (long long j = 0; j < pl; ++j) {
        Side want;
        want.from = Point{checked_power_degree(p, r - j - 1), j + 1};
        want.to = Point{checked_power_degree(p, r - j), j};
        bool found = false;
        for (const Side& s : np.principal)
            if (s.from == want.from && s.to == want.to) found = true;
        if (!found) rep.predicted_segments_ok = false;
    }
    if (!rep.predicted_segments_ok || rep.degree_one_sides != rep.side_count)
        throw std::runtime_error(
            "dpr_family_check: polygon shape deviates from the predicted segments");

    rep.P1 = rep.degree_one_sides;  // each degree-1 side gives one prime with f = 1
    rep.N1 = p;
    rep.common_index_divisor = BigInt(rep.P1) > rep.N1 && rep.P1 >= pl + 1;
    rep.irreducible = is_irreducible_q(F);
    return rep;
}

}  // namespace padicore
