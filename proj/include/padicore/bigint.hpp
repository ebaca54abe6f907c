#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace padicore {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(const BigInt& n);

/// Throws std::invalid_argument unless p is prime.
void require_prime(const BigInt& p);

/// A p-adic valuation: a natural number, or infinity (exactly for zero inputs).
class PAdicVal {
public:
    PAdicVal() : finite_(true), v_(0) {}
    explicit PAdicVal(long long v) : finite_(true), v_(v) {}

    static PAdicVal infinity() {
        PAdicVal x;
        x.finite_ = false;
        return x;
    }

    bool is_infinity() const { return !finite_; }

    long long value() const {
        if (!finite_) throw std::logic_error("PAdicVal: value() of infinity");
        return v_;
    }

    friend bool operator==(const PAdicVal& a, const PAdicVal& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const PAdicVal& a, const PAdicVal& b) { return !(a == b); }
    friend bool operator<(const PAdicVal& a, const PAdicVal& b) {
        if (!a.finite_) return false;           // inf < x never
        if (!b.finite_) return true;            // finite < inf
        return a.v_ < b.v_;
    }
    friend bool operator<=(const PAdicVal& a, const PAdicVal& b) { return a < b || a == b; }
    friend bool operator>(const PAdicVal& a, const PAdicVal& b) { return b < a; }
    friend bool operator>=(const PAdicVal& a, const PAdicVal& b) { return b <= a; }

    std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

private:
    bool finite_;
    long long v_;
};

/// Largest k with p^k | n; infinity for n = 0. p must be prime.
PAdicVal vp(const BigInt& n, const BigInt& p);

/// n / p^{vp(n)}, sign preserved. Rejects n = 0.
BigInt p_free_part(const BigInt& n, const BigInt& p);

BigInt pow_big(const BigInt& base, long long e);

/// Floor division (round toward -infinity) for signed BigInt.
BigInt fdiv(const BigInt& a, const BigInt& b);

/// a mod m reduced into [0, m), m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace padicore
