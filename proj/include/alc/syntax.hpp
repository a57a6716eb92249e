#pragma once

#include "alc/term.hpp"

#include <stdexcept>
#include <string>

namespace alc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

// Concrete syntax:
//   term   := sum ; sum := scaled ('+' scaled)* ; scaled := (scalar '.')* app
//   app    := atom atom* ; atom := var | '0' | '\' var '.' term | '(' term ')'
// Application is left-associative, '+' chains fold to the right, a lambda
// body extends as far right as possible. `k`, `b`, `b1`, `b2` parse into
// their reserved namespaces. Scalars are rationals (`2`, `-1`, `1/2`) or,
// in Gaussian mode, `a+bi` forms (`2i`, `1/2-1i`).
TermPtr parse_term(const std::string& text, RingMode mode = RingMode::Rational);

// Minimal-parentheses rendering; parse_term(print_term(m)) == m (same tree).
std::string print_term(const TermPtr& m);

}  // namespace alc
