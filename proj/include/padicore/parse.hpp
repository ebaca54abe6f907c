#pragma once

#include <stdexcept>
#include <string>

#include "padicore/intpoly.hpp"

namespace padicore {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          pos(pos) {}
};

/// Integer-coefficient expressions in one variable x with ^ * + - and
/// parentheses; whitespace-insensitive; juxtaposition multiplies (3x^2).
///
///   expr   = ["+"|"-"] term {("+"|"-") term}
///   term   = factor {["*"] factor}
///   factor = atom ["^" natural]
///   atom   = natural | "x" | "(" expr ")"
IntPoly parse_poly(const std::string& text);

}  // namespace padicore
