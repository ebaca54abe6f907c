#pragma once

#include <initializer_list>
#include <utility>
#include <string>
#include <vector>

#include "padicore/bigint.hpp"

namespace padicore {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
/// coeff(i) is the coefficient of x^i; the zero polynomial has no stored
/// coefficients and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(const BigInt& constant);
    IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<BigInt> coeffs);

    static IntPoly variable();                       // x
    static IntPoly monomial(const BigInt& c, size_t deg);

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const BigInt& coeff(size_t i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;
    bool is_monic() const;

    BigInt operator()(const BigInt& x) const;        // evaluation

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& s, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly derivative() const;

    /// Quotient and remainder by a monic divisor; exact over Z.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    /// True iff divisor (monic) divides *this exactly over Z.
    bool divisible_by_monic(const IntPoly& divisor) const;

    /// F(x + t).
    IntPoly shift(const BigInt& t) const;

    /// Every coefficient divided by s; s must divide each exactly.
    IntPoly exact_div_scalar(const BigInt& s) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

}  // namespace padicore
