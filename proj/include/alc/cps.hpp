#pragma once

#include "alc/term.hpp"

namespace alc {

// V2N translates the call-by-value calculus into the call-by-name one;
// N2V is the opposite simulation.
enum class Direction { V2N, N2V };
const char* direction_name(Direction d);

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The CPS image of a source term. Introduces only the reserved names
// k/b/b1/b2 and preserves the set of free variables; source terms that
// already mention reserved-namespace variables are rejected.
TermPtr cps(const TermPtr& m, Direction dir);

// Value translation for V2N: variables map to themselves, abstraction
// bodies are CPS-translated. The argument must be a base value.
TermPtr psi(const TermPtr& base_value);

// Value translation for N2V; defined on abstractions only.
TermPtr phi(const TermPtr& abstraction);

// The colon translation M : K, the CPS image with the initial
// administrative redexes already collapsed. K must belong to the
// continuation class of the target grammar for the direction.
TermPtr colon(const TermPtr& m, const TermPtr& k, Direction dir);

}  // namespace alc
