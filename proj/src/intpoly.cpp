#include "padicore/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace padicore {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(const BigInt& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { normalize(); }

IntPoly IntPoly::variable() { return IntPoly({0, 1}); }

IntPoly IntPoly::monomial(const BigInt& c, size_t deg) {
    std::vector<BigInt> v(deg + 1, kZero);
    v[deg] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
    if (s == 0) return IntPoly();
    IntPoly r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = BigInt(i) * c_[i];
    return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic())
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    long long dd = divisor.degree();
    if (degree() < dd) return {IntPoly(), *this};
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(degree() - dd + 1, kZero);
    for (long long i = degree(); i >= dd; --i) {
        BigInt q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (long long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool IntPoly::divisible_by_monic(const IntPoly& divisor) const {
    return divmod_monic(divisor).second.is_zero();
}

IntPoly IntPoly::shift(const BigInt& t) const {
    // Horner: result = (...(c_n (x+t) + c_{n-1})(x+t) + ...) + c_0
    IntPoly xt({t, 1});
    IntPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * xt;
        r += IntPoly(*it);
    }
    return r;
}

IntPoly IntPoly::exact_div_scalar(const BigInt& s) const {
    if (s == 0) throw std::invalid_argument("exact_div_scalar: zero divisor");
    IntPoly r(*this);
    for (auto& c : r.c_) {
        if (c % s != 0)
            throw std::invalid_argument("exact_div_scalar: division is not exact");
        c /= s;
    }
    return r;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace padicore
