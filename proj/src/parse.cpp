#include "padicore/parse.hpp"

#include <cctype>

namespace padicore {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    IntPoly run() {
        IntPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
    }

    IntPoly expr() {
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            if (c == '-') sign = -1;
        }
        IntPoly r = sign < 0 ? -term() : term();
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                IntPoly t = term();
                r = c == '+' ? r + t : r - t;
            } else {
                break;
            }
        }
        return r;
    }

    IntPoly term() {
        IntPoly r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * factor();
            } else if (starts_atom(c)) {
                r = r * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return r;
    }

    IntPoly factor() {
        IntPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ == start) throw ParseError("expected exponent", pos_);
            long long e = std::stoll(s_.substr(start, pos_ - start));
            IntPoly r((BigInt(1)));
            for (long long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    IntPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly r = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (c == 'x') {
            ++pos_;
            return IntPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return IntPoly(BigInt(s_.substr(start, pos_ - start)));
        }
        throw ParseError("expected number, x, or '('", pos_);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace padicore
