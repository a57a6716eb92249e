#pragma once

#include "alc/scalar.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace alc {

// Three disjoint variable namespaces. Continuation holds only the reserved
// name `k`, Intermediate only `b`, `b1`, `b2`; everything user-facing lives
// in Source. Names in distinct namespaces never compare equal.
enum class Space : unsigned char { Source, Cont, Interm };

struct VarName {
    Space space = Space::Source;
    std::string name;

    bool operator==(const VarName& o) const { return space == o.space && name == o.name; }
    bool operator!=(const VarName& o) const { return !(*this == o); }
    bool operator<(const VarName& o) const {
        if (space != o.space) return space < o.space;
        return name < o.name;
    }
};

VarName src_var(std::string name);
VarName cont_k();
VarName interm_var(std::string name);  // "b", "b1" or "b2"

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct VarNode { VarName name; };
struct LamNode { VarName bound; TermPtr body; };
struct AppNode { TermPtr fun; TermPtr arg; };
struct ZeroNode {};
struct ScaleNode { Scalar coeff; TermPtr body; };
struct SumNode { TermPtr lhs; TermPtr rhs; };

enum class TermKind : unsigned char { Var, Lam, App, Zero, Scale, Sum };

// Immutable term tree; share freely.
class Term {
public:
    using Node = std::variant<VarNode, LamNode, AppNode, ZeroNode, ScaleNode, SumNode>;

    explicit Term(Node n) : node(std::move(n)) {}
    Node node;

    TermKind kind() const { return static_cast<TermKind>(node.index()); }
    template <class T> const T& as() const { return std::get<T>(node); }
    template <class T> const T* get_if() const { return std::get_if<T>(&node); }
};

TermPtr var(VarName name);
TermPtr var(const std::string& source_name);
TermPtr lam(VarName bound, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr zero();
TermPtr scale(Scalar coeff, TermPtr body);
TermPtr sum(TermPtr lhs, TermPtr rhs);

struct TermError : std::runtime_error {
    explicit TermError(const std::string& what) : std::runtime_error(what) {}
};

std::set<VarName> free_vars(const TermPtr& m);
bool contains_var(const TermPtr& m, const VarName& v);  // free occurrence

// Capture-avoiding substitution m[x := n]. Binders of m are renamed within
// their own namespace when they would capture a free variable of n. The
// Cont namespace has the single name `k` and Interm only `b`/`b1`/`b2`, so a
// forced capture there that exhausts the namespace throws TermError; this
// cannot happen for terms respecting the reserved-name discipline.
TermPtr substitute(const TermPtr& m, const VarName& x, const TermPtr& n);

// Equality up to consistent renaming of bound variables within namespaces.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

bool is_base_value(const TermPtr& m);  // variable or abstraction
bool is_value(const TermPtr& m);       // linear combination of base values

// Alpha-invariant canonical rendering (bound variables as binder serials),
// used as the total order on alpha-equivalence classes and as a search key.
std::string nameless_key(const TermPtr& m);

// Normal form of the linear structure under the vector-space rules, applied
// only at positions the plain context rules can reach (application-left
// spines, sum and scale children; never under a binder, never in argument
// position). Result is a right-associated sum of coeff.atom entries with
// nonzero coefficients, coefficient 1 elided, alpha-equivalent atoms merged
// and atoms sorted by nameless_key; the empty combination is Zero.
TermPtr canonicalize_linear(const TermPtr& m);

// nameless_key(canonicalize_linear(m)): equality modulo the linear rules.
std::string linear_key(const TermPtr& m);

inline bool alpha_eq_modulo_linear(const TermPtr& a, const TermPtr& b) {
    return linear_key(a) == linear_key(b);
}

}  // namespace alc
