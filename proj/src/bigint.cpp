#include "padicore/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace padicore {

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    // Deterministic for anything this artifact sees; 25 rounds otherwise.
    return boost::multiprecision::miller_rabin_test(n, 25);
}

void require_prime(const BigInt& p) {
    if (!is_prime(p))
        throw std::invalid_argument("expected a prime, got " + p.str());
}

PAdicVal vp(const BigInt& n, const BigInt& p) {
    require_prime(p);
    if (n == 0) return PAdicVal::infinity();
    BigInt m = abs(n);
    long long k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return PAdicVal(k);
}

BigInt p_free_part(const BigInt& n, const BigInt& p) {
    require_prime(p);
    if (n == 0) throw std::invalid_argument("p_free_part: n must be nonzero");
    BigInt m = n;
    while (m % p == 0) m /= p;
    return m;
}

BigInt pow_big(const BigInt& base, long long e) {
    if (e < 0) throw std::invalid_argument("pow_big: negative exponent");
    BigInt r = 1, b = base;
    long long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace padicore
