#pragma once

#include "alc/cps.hpp"
#include "alc/term.hpp"

namespace alc {

// Syntactic categories of the CPS image for one direction. The base
// classes are pairwise disjoint; Computation/Suspension are the linear
// combination closures of their base classes (pure-zero combinations such
// as 0 or 2.0 inhabit both, and classify reports Computation for them).
enum class GrammarClass : unsigned char {
    BaseComputation,   // C
    Computation,       // D
    BaseSuspension,    // S
    Suspension,        // T
    Continuation,      // K
    CpsValue,          // B
    None,
};

const char* grammar_class_name(GrammarClass c);

// Decides grammar membership, enforcing the reserved-name discipline: the
// continuation leaf is the literal k, binder patterns use the literal
// names b/b1/b2 (shadowed re-binding at deeper levels is fine), and the
// intermediate variables never occur free.
GrammarClass classify(const TermPtr& m, Direction dir);

// Membership test; the combination classes include their base classes.
bool in_class(const TermPtr& m, GrammarClass cls, Direction dir);

// The inverse translation on computations (the overline map):
// rejects unclassifiable input, reporting the failing subterm.
TermPtr inv_computation(const TermPtr& d, Direction dir);

// Inverse on suspensions (sigma).
TermPtr inv_suspension(const TermPtr& t, Direction dir);

// Inverse on CPS-values (psi's inverse for V2N, phi's for N2V).
TermPtr inv_value(const TermPtr& b, Direction dir);

// Meta-level hole filling K[M]; not a beta step.
TermPtr apply_continuation(const TermPtr& k, const TermPtr& m, Direction dir);

}  // namespace alc
