#pragma once

/**
 * @file expr.hpp
 * @brief Text front end for algebra elements.
 *
 * Grammar:
 *
 *     expr   := ["+"|"-"] term (("+"|"-") term)*
 *     term   := factor (("*"|"/") factor)*        divisors must be scalars
 *     factor := atom ("^" ["-"] INT)?
 *     atom   := "T" INT | "E" INT | "E{" INT ("," INT)+ "}" | "u" | INT | "(" expr ")"
 *
 * Negative powers are accepted for nonzero scalars and for c*T_w. Whitespace
 * is ignored. The printer emits text in the same language, so
 * parse_word(to_text(x), n) == x.
 */

#include "braidties/algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace braidties {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses and evaluates text at size n. Index errors are reported as ParseError too.
Element parse_word(std::string_view text, int n);

/// Terms in key order, e.g. "1 + (u-1)*E{1,2} + (u-1)*E{1,2}*T1"; "0" for zero.
std::string to_text(const Element& x);

}  // namespace braidties
