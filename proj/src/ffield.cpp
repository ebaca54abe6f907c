#include "padicore/ffield.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace padicore {

namespace {

int64_t norm_mod(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

void fp_normalize(FpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

void check_same_p(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("FpPoly: mixed moduli");
}

}  // namespace

std::string FpPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        int64_t a = c[i];
        if (a == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

FpPoly fp_from(const IntPoly& f, int64_t p) {
    FpPoly r;
    r.p = p;
    r.c.reserve(f.coeffs().size());
    for (const BigInt& c : f.coeffs())
        r.c.push_back(static_cast<int64_t>(mod_floor(c, p)));
    fp_normalize(r);
    return r;
}

FpPoly fp_const(int64_t p, int64_t v) {
    FpPoly r;
    r.p = p;
    v = norm_mod(v, p);
    if (v != 0) r.c.push_back(v);
    return r;
}

FpPoly fp_monomial(int64_t p, int64_t coeff, size_t deg) {
    FpPoly r;
    r.p = p;
    coeff = norm_mod(coeff, p);
    if (coeff != 0) {
        r.c.assign(deg + 1, 0);
        r.c[deg] = coeff;
    }
    return r;
}

IntPoly fp_lift(const FpPoly& f) {
    std::vector<BigInt> c(f.c.begin(), f.c.end());
    return IntPoly(std::move(c));
}

bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }

bool fp_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long long i = a.degree(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

int64_t inv_mod(int64_t a, int64_t p) {
    a = norm_mod(a, p);
    if (a == 0) throw std::invalid_argument("inv_mod: zero");
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return norm_mod(t, p);
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    FpPoly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = norm_mod(a.coeff(i) + b.coeff(i), a.p);
    fp_normalize(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    FpPoly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = norm_mod(a.coeff(i) - b.coeff(i), a.p);
    fp_normalize(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    FpPoly r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = norm_mod(r.c[i + j] + a.c[i] * b.c[j], a.p);
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_scalar_mul(int64_t s, const FpPoly& a) {
    FpPoly r;
    r.p = a.p;
    s = norm_mod(s, a.p);
    if (s == 0) return r;
    r.c.reserve(a.c.size());
    for (int64_t c : a.c) r.c.push_back(norm_mod(c * s, a.p));
    fp_normalize(r);
    return r;
}

FpDivMod fp_divmod(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    if (b.is_zero()) throw std::invalid_argument("fp_divmod: division by zero");
    FpPoly rem = a, quot;
    quot.p = a.p;
    if (a.degree() < b.degree()) return {quot, rem};
    quot.c.assign(a.degree() - b.degree() + 1, 0);
    int64_t lcinv = inv_mod(b.leading(), a.p);
    for (long long i = rem.degree(); i >= b.degree(); --i) {
        if ((size_t)i >= rem.c.size() || rem.c[i] == 0) continue;
        int64_t q = norm_mod(rem.c[i] * lcinv, a.p);
        quot.c[i - b.degree()] = q;
        for (long long j = 0; j <= b.degree(); ++j)
            rem.c[i - b.degree() + j] =
                norm_mod(rem.c[i - b.degree() + j] - q * b.c[j], a.p);
    }
    fp_normalize(rem);
    fp_normalize(quot);
    return {quot, rem};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).rem; }

FpPoly fp_make_monic(const FpPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return fp_scalar_mul(inv_mod(a.leading(), a.p), a);
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(a);
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly r;
    r.p = a.p;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = norm_mod(a.c[i] * static_cast<int64_t>(i % a.p), a.p);
    fp_normalize(r);
    return r;
}

int64_t fp_eval(const FpPoly& a, int64_t x) {
    x = norm_mod(x, a.p);
    int64_t r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        r = norm_mod(r * x + *it, a.p);
    return r;
}

BigInt count_monic_irreducibles(const BigInt& p, long long f) {
    require_prime(p);
    if (f < 1) throw std::invalid_argument("count_monic_irreducibles: f must be >= 1");
    // distinct prime divisors of f
    std::vector<long long> primes;
    long long m = f;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    BigInt sum = 0;
    size_t k = primes.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        long long d = 1;
        int bits = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) {
                d *= primes[i];
                ++bits;
            }
        BigInt term = pow_big(p, f / d);
        sum += (bits % 2 == 0) ? term : -term;
    }
    if (sum % f != 0) throw std::logic_error("count_monic_irreducibles: inexact division");
    return sum / f;
}

// ---------------------------------------------------------------------------
// F_q = F_p[x]/(modulus)

BigInt FqContext::order() const { return pow_big(BigInt(p), ext_degree()); }

bool operator==(const FqContext& a, const FqContext& b) {
    return a.p == b.p && a.modulus == b.modulus;
}

namespace {
void check_same_ctx(const FqContext& a, const FqContext& b) {
    if (!(a == b)) throw std::invalid_argument("FqPoly: mixed residue fields");
}
}  // namespace

FpPoly fq_reduce(const FqContext& k, const FpPoly& a) {
    if (a.p != k.p) throw std::invalid_argument("fq_reduce: mixed moduli");
    return fp_mod(a, k.modulus);
}

FpPoly fq_add(const FqContext& k, const FpPoly& a, const FpPoly& b) {
    return fq_reduce(k, fp_add(a, b));
}

FpPoly fq_sub(const FqContext& k, const FpPoly& a, const FpPoly& b) {
    return fq_reduce(k, fp_sub(a, b));
}

FpPoly fq_mul(const FqContext& k, const FpPoly& a, const FpPoly& b) {
    return fq_reduce(k, fp_mul(a, b));
}

FpPoly fq_inv(const FqContext& k, const FpPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("fq_inv: zero");
    // extended Euclid in F_p[x]
    FpPoly r0 = k.modulus, r1 = fq_reduce(k, a);
    FpPoly t0 = fp_const(k.p, 0), t1 = fp_const(k.p, 1);
    while (!r1.is_zero()) {
        FpDivMod qr = fp_divmod(r0, r1);
        FpPoly t2 = fp_sub(t0, fp_mul(qr.quot, t1));
        r0 = std::move(r1);
        r1 = std::move(qr.rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::logic_error("fq_inv: modulus not irreducible?");
    return fq_reduce(k, fp_scalar_mul(inv_mod(r0.c[0], k.p), t0));
}

FpPoly fq_pow(const FqContext& k, FpPoly a, BigInt e) {
    if (e < 0) throw std::invalid_argument("fq_pow: negative exponent");
    FpPoly r = fp_const(k.p, 1);
    a = fq_reduce(k, a);
    while (e > 0) {
        if (e % 2 == 1) r = fq_mul(k, r, a);
        a = fq_mul(k, a, a);
        e /= 2;
    }
    return r;
}

// ---------------------------------------------------------------------------
// FqPoly

FpPoly FqPoly::coeff(size_t i) const {
    if (i < c.size()) return c[i];
    return fp_const(ctx.p, 0);
}

bool FqPoly::is_monic() const {
    return !c.empty() && c.back().degree() == 0 && c.back().c[0] == 1;
}

std::string FqPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        const FpPoly& a = c[i];
        if (a.is_zero()) continue;
        if (!first) out << "+";
        first = false;
        bool plain = a.degree() <= 0;
        std::string cs = a.str("x");
        if (i == 0) {
            out << (plain ? cs : "(" + cs + ")");
        } else {
            if (!(plain && a.c[0] == 1))
                out << (plain ? cs : "(" + cs + ")") << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {
void fq_normalize(FqPoly& f) {
    while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
}
}  // namespace

FqPoly fq_poly(const FqContext& k, std::vector<FpPoly> coeffs) {
    FqPoly r;
    r.ctx = k;
    r.c = std::move(coeffs);
    for (auto& e : r.c) e = fq_reduce(k, e);
    fq_normalize(r);
    return r;
}

FqPoly fq_poly_from_ints(const FqContext& k, const std::vector<int64_t>& coeffs) {
    std::vector<FpPoly> v;
    v.reserve(coeffs.size());
    for (int64_t c : coeffs) v.push_back(fp_const(k.p, c));
    return fq_poly(k, std::move(v));
}

bool operator==(const FqPoly& a, const FqPoly& b) {
    return a.ctx == b.ctx && a.c == b.c;
}

bool fq_poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long long i = a.degree(); i >= 0; --i) {
        if (!(a.c[i] == b.c[i])) return fp_less(a.c[i], b.c[i]);
    }
    return false;
}

FqPoly fq_poly_add(const FqPoly& a, const FqPoly& b) {
    check_same_ctx(a.ctx, b.ctx);
    FqPoly r;
    r.ctx = a.ctx;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c.push_back(fq_add(a.ctx, a.coeff(i), b.coeff(i)));
    fq_normalize(r);
    return r;
}

FqPoly fq_poly_sub(const FqPoly& a, const FqPoly& b) {
    check_same_ctx(a.ctx, b.ctx);
    FqPoly r;
    r.ctx = a.ctx;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c.push_back(fq_sub(a.ctx, a.coeff(i), b.coeff(i)));
    fq_normalize(r);
    return r;
}

FqPoly fq_poly_mul(const FqPoly& a, const FqPoly& b) {
    check_same_ctx(a.ctx, b.ctx);
    FqPoly r;
    r.ctx = a.ctx;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, fp_const(a.ctx.p, 0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = fq_add(a.ctx, r.c[i + j], fq_mul(a.ctx, a.c[i], b.c[j]));
        }
    }
    fq_normalize(r);
    return r;
}

FqPoly fq_poly_scalar_mul(const FpPoly& s, const FqPoly& a) {
    FqPoly r;
    r.ctx = a.ctx;
    if (s.is_zero()) return r;
    r.c.reserve(a.c.size());
    for (const auto& c : a.c) r.c.push_back(fq_mul(a.ctx, s, c));
    fq_normalize(r);
    return r;
}

FqDivMod fq_poly_divmod(const FqPoly& a, const FqPoly& b) {
    check_same_ctx(a.ctx, b.ctx);
    if (b.is_zero()) throw std::invalid_argument("fq_poly_divmod: division by zero");
    const FqContext& k = a.ctx;
    FqPoly rem = a, quot;
    quot.ctx = k;
    if (a.degree() < b.degree()) return {quot, rem};
    quot.c.assign(a.degree() - b.degree() + 1, fp_const(k.p, 0));
    FpPoly lcinv = fq_inv(k, b.c.back());
    for (long long i = rem.degree(); i >= b.degree(); --i) {
        if ((size_t)i >= rem.c.size() || rem.c[i].is_zero()) continue;
        FpPoly q = fq_mul(k, rem.c[i], lcinv);
        quot.c[i - b.degree()] = q;
        for (long long j = 0; j <= b.degree(); ++j)
            rem.c[i - b.degree() + j] =
                fq_sub(k, rem.c[i - b.degree() + j], fq_mul(k, q, b.c[j]));
    }
    fq_normalize(rem);
    fq_normalize(quot);
    return {quot, rem};
}

FqPoly fq_poly_mod(const FqPoly& a, const FqPoly& b) { return fq_poly_divmod(a, b).rem; }

FqPoly fq_poly_make_monic(const FqPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return fq_poly_scalar_mul(fq_inv(a.ctx, a.c.back()), a);
}

FqPoly fq_poly_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = fq_poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_poly_make_monic(a);
}

FqPoly fq_poly_derivative(const FqPoly& a) {
    FqPoly r;
    r.ctx = a.ctx;
    if (a.c.size() <= 1) return r;
    r.c.reserve(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) {
        FpPoly s = fp_const(a.ctx.p, static_cast<int64_t>(i % a.ctx.p));
        r.c.push_back(fq_mul(a.ctx, s, a.c[i]));
    }
    fq_normalize(r);
    return r;
}

FqPoly fq_poly_pow_mod(const FqPoly& base, BigInt e, const FqPoly& mod) {
    if (e < 0) throw std::invalid_argument("fq_poly_pow_mod: negative exponent");
    FqPoly r = fq_poly_from_ints(base.ctx, {1});
    FqPoly b = fq_poly_mod(base, mod);
    while (e > 0) {
        if (e % 2 == 1) r = fq_poly_mod(fq_poly_mul(r, b), mod);
        b = fq_poly_mod(fq_poly_mul(b, b), mod);
        e /= 2;
    }
    return r;
}

bool is_squarefree(const FqPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    FqPoly d = fq_poly_derivative(g);
    if (d.is_zero()) return g.degree() <= 0;
    return fq_poly_gcd(g, d).degree() == 0;
}

// ---------------------------------------------------------------------------
// Factorization: squarefree split, distinct-degree split, equal-degree split.

namespace {

FqPoly fq_poly_y(const FqContext& k) { return fq_poly_from_ints(k, {0, 1}); }

/// f = g(y^p) with the coefficients of g the p-th roots (a -> a^{q/p}).
FqPoly fq_pth_root(const FqPoly& f) {
    const FqContext& k = f.ctx;
    BigInt e = pow_big(BigInt(k.p), k.ext_degree() - 1);  // q/p exponent
    std::vector<FpPoly> out;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i % k.p == 0) {
            out.push_back(fq_pow(k, f.c[i], e));
        } else if (!f.c[i].is_zero()) {
            throw std::logic_error("fq_pth_root: not a p-th power");
        }
    }
    return fq_poly(k, std::move(out));
}

void fq_sff(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
    const FqContext& k = f.ctx;
    if (f.degree() <= 0) return;
    FqPoly d = fq_poly_derivative(f);
    if (d.is_zero()) {
        fq_sff(fq_pth_root(f), mult * static_cast<int>(k.p), out);
        return;
    }
    FqPoly c = fq_poly_gcd(f, d);
    FqPoly w = fq_poly_divmod(f, c).quot;
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = fq_poly_gcd(w, c);
        FqPoly z = fq_poly_divmod(w, y).quot;
        if (z.degree() > 0) out.emplace_back(z, mult * i);
        w = std::move(y);
        c = fq_poly_divmod(c, w).quot;
        ++i;
    }
    if (c.degree() > 0) fq_sff(fq_pth_root(c), mult * static_cast<int>(k.p), out);
}

/// f squarefree monic -> list of (product of irreducibles of degree d, d).
std::vector<std::pair<FqPoly, long long>> fq_ddf(const FqPoly& f) {
    const FqContext& k = f.ctx;
    BigInt q = k.order();
    std::vector<std::pair<FqPoly, long long>> out;
    FqPoly g = f;
    FqPoly h = fq_poly_mod(fq_poly_y(k), g);
    long long d = 0;
    while (g.degree() >= 2 * (d + 1)) {
        ++d;
        h = fq_poly_pow_mod(h, q, g);
        FqPoly gd = fq_poly_gcd(fq_poly_sub(h, fq_poly_y(k)), g);
        if (gd.degree() > 0) {
            out.emplace_back(gd, d);
            g = fq_poly_divmod(g, gd).quot;
            h = fq_poly_mod(h, g);
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

FqPoly fq_random_poly(const FqContext& k, long long max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> dist(0, k.p - 1);
    std::vector<FpPoly> coeffs;
    for (long long i = 0; i < max_deg; ++i) {
        FpPoly e;
        e.p = k.p;
        for (long long j = 0; j < k.ext_degree(); ++j) e.c.push_back(dist(rng));
        while (!e.c.empty() && e.c.back() == 0) e.c.pop_back();
        coeffs.push_back(std::move(e));
    }
    return fq_poly(k, std::move(coeffs));
}

void fq_edf(const FqPoly& f, long long d, std::mt19937_64& rng,
            std::vector<FqPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FqContext& k = f.ctx;
    BigInt q = k.order();
    while (true) {
        FqPoly a = fq_random_poly(k, f.degree(), rng);
        if (a.degree() < 1) continue;
        FqPoly g;
        if (k.p != 2) {
            BigInt e = (pow_big(q, d) - 1) / 2;
            FqPoly b = fq_poly_pow_mod(a, e, f);
            g = fq_poly_gcd(fq_poly_sub(b, fq_poly_from_ints(k, {1})), f);
        } else {
            // char 2: trace map over F_2
            FqPoly t = fq_poly_mod(a, f);
            FqPoly sum = t;
            long long bits = k.ext_degree() * d;
            for (long long i = 1; i < bits; ++i) {
                t = fq_poly_mod(fq_poly_mul(t, t), f);
                sum = fq_poly_add(sum, t);
            }
            g = fq_poly_gcd(sum, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fq_edf(g, d, rng, out);
            fq_edf(fq_poly_divmod(f, g).quot, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> fq_factor(const FqPoly& g, uint64_t seed) {
    if (g.is_zero()) throw std::invalid_argument("fq_factor: zero polynomial");
    std::vector<std::pair<FqPoly, int>> result;
    if (g.degree() == 0) return result;
    FqPoly f = fq_poly_make_monic(g);
    std::vector<std::pair<FqPoly, int>> sff;
    fq_sff(f, 1, sff);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (const auto& [part, mult] : sff) {
        for (const auto& [prod, d] : fq_ddf(part)) {
            std::vector<FqPoly> irreds;
            fq_edf(prod, d, rng, irreds);
            for (auto& irr : irreds) result.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return fq_poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return result;
}

bool fq_is_irreducible(const FqPoly& g) {
    if (g.degree() < 1) return false;
    const FqContext& k = g.ctx;
    FqPoly f = fq_poly_make_monic(g);
    long long n = f.degree();
    if (n == 1) return true;
    BigInt q = k.order();
    FqPoly y = fq_poly_y(k);
    // y^{q^n} == y mod f, and gcd(y^{q^{n/t}} - y, f) == 1 for prime t | n
    FqPoly h = fq_poly_mod(y, f);
    std::vector<long long> primes;
    long long m = n;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (long long t : primes) {
        FqPoly ht = fq_poly_mod(y, f);
        for (long long i = 0; i < n / t; ++i) ht = fq_poly_pow_mod(ht, q, f);
        if (fq_poly_gcd(fq_poly_sub(ht, y), f).degree() != 0) return false;
    }
    for (long long i = 0; i < n; ++i) h = fq_poly_pow_mod(h, q, f);
    return fq_poly_sub(h, y).is_zero();
}

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("fp_factor: zero polynomial");
    FqContext k{f.p, fp_monomial(f.p, 1, 1)};  // F_p as F_p[x]/(x)
    std::vector<FpPoly> coeffs;
    coeffs.reserve(f.c.size());
    for (int64_t c : f.c) coeffs.push_back(fp_const(f.p, c));
    auto fq = fq_factor(fq_poly(k, std::move(coeffs)), seed);
    std::vector<std::pair<FpPoly, int>> out;
    out.reserve(fq.size());
    for (const auto& [g, m] : fq) {
        FpPoly h;
        h.p = f.p;
        h.c.reserve(g.c.size());
        for (const auto& e : g.c) h.c.push_back(e.is_zero() ? 0 : e.c[0]);
        fp_normalize(h);
        out.emplace_back(std::move(h), m);
    }
    return out;
}

bool fp_is_irreducible(const FpPoly& f) {
    FqContext k{f.p, fp_monomial(f.p, 1, 1)};
    std::vector<FpPoly> coeffs;
    coeffs.reserve(f.c.size());
    for (int64_t c : f.c) coeffs.push_back(fp_const(f.p, c));
    return fq_is_irreducible(fq_poly(k, std::move(coeffs)));
}

}  // namespace padicore
