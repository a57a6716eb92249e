#include "alc/inverse.hpp"

#include "alc/syntax.hpp"

namespace alc {

const char* grammar_class_name(GrammarClass c) {
    switch (c) {
        case GrammarClass::BaseComputation: return "BaseComputation";
        case GrammarClass::Computation: return "Computation";
        case GrammarClass::BaseSuspension: return "BaseSuspension";
        case GrammarClass::Suspension: return "Suspension";
        case GrammarClass::Continuation: return "Continuation";
        case GrammarClass::CpsValue: return "CpsValue";
        case GrammarClass::None: return "None";
    }
    return "?";
}

namespace {

bool is_k_leaf(const TermPtr& t) {
    const auto* v = t->get_if<VarNode>();
    return v && v->name.space == Space::Cont && v->name.name == "k";
}

bool is_src_var(const TermPtr& t) {
    const auto* v = t->get_if<VarNode>();
    return v && v->name.space == Space::Source;
}

bool isB(const TermPtr& t, Direction dir);
bool isS(const TermPtr& t, Direction dir);
bool isT(const TermPtr& t, Direction dir);
bool isK(const TermPtr& t, Direction dir);
bool isC(const TermPtr& t, Direction dir);
bool isD(const TermPtr& t, Direction dir);

// A suspension-or-zero slot. The displayed grammars write a bare S here,
// but the translation of the zero term is 0, so images of sources that
// mention 0 (under a binder, or as an argument) need the zero production;
// reduction keeps the widened classes closed.
bool isSZ(const TermPtr& t, Direction dir) {
    return t->kind() == TermKind::Zero || isS(t, dir);
}

bool isB(const TermPtr& t, Direction dir) {
    if (dir == Direction::V2N && is_src_var(t)) return true;
    const auto* l = t->get_if<LamNode>();
    if (!l || l->bound.space != Space::Source) return false;
    return dir == Direction::V2N ? isT(l->body, dir) : isSZ(l->body, dir);
}

bool isS(const TermPtr& t, Direction dir) {
    if (dir == Direction::N2V && is_src_var(t)) return true;
    const auto* l = t->get_if<LamNode>();
    return l && l->bound.space == Space::Cont && isC(l->body, dir);
}

bool isT(const TermPtr& t, Direction dir) {
    switch (t->kind()) {
        case TermKind::Zero:
            return true;
        case TermKind::Scale:
            return isT(t->as<ScaleNode>().body, dir);
        case TermKind::Sum: {
            const auto& s = t->as<SumNode>();
            return isT(s.lhs, dir) && isT(s.rhs, dir);
        }
        default:
            return isS(t, dir);
    }
}

// The binder in a continuation pattern is any of the reserved intermediate
// names: the translation writes b / b1,b2, but beta-reducing the two-slot
// form leaves one-slot continuations binding b2, and the patterns are
// structurally unambiguous anyway (the one-slot form applies an
// application, the two-slot form applies a suspension).
bool isK(const TermPtr& t, Direction dir) {
    if (is_k_leaf(t)) return true;
    const auto* l = t->get_if<LamNode>();
    if (!l || l->bound.space != Space::Interm) return false;
    const auto* body = l->body->get_if<AppNode>();
    if (!body) return false;
    if (const auto* inner = body->fun->get_if<AppNode>()) {
        // λb.BbK (v2n) / λb.bSK (n2v)
        const auto* occ = dir == Direction::V2N ? inner->arg->get_if<VarNode>()
                                                : inner->fun->get_if<VarNode>();
        if (!occ || occ->name != l->bound) return false;
        const TermPtr& slot = dir == Direction::V2N ? inner->fun : inner->arg;
        bool slot_ok = dir == Direction::V2N ? isB(slot, dir) : isSZ(slot, dir);
        return slot_ok && isK(body->arg, dir) && !contains_var(slot, l->bound) &&
               !contains_var(body->arg, l->bound);
    }
    if (dir == Direction::V2N) {
        // λb1.T(λb2.b1b2K)
        const TermPtr& t_slot = body->fun;
        const auto* wrap = body->arg->get_if<LamNode>();
        if (!wrap || wrap->bound.space != Space::Interm || wrap->bound == l->bound)
            return false;
        const auto* w_body = wrap->body->get_if<AppNode>();
        if (!w_body) return false;
        const auto* pair = w_body->fun->get_if<AppNode>();
        if (!pair) return false;
        const auto* occ1 = pair->fun->get_if<VarNode>();
        const auto* occ2 = pair->arg->get_if<VarNode>();
        if (!occ1 || occ1->name != l->bound) return false;
        if (!occ2 || occ2->name != wrap->bound) return false;
        const TermPtr& tail = w_body->arg;
        return isT(t_slot, dir) && isK(tail, dir) && !contains_var(t_slot, l->bound) &&
               !contains_var(tail, l->bound) && !contains_var(tail, wrap->bound);
    }
    return false;
}

bool isC(const TermPtr& t, Direction dir) {
    const auto* a = t->get_if<AppNode>();
    if (!a) return false;
    const TermPtr& f = a->fun;
    const TermPtr& arg = a->arg;
    if (is_k_leaf(f)) return isB(arg, dir);
    switch (f->kind()) {
        case TermKind::Lam: {
            const auto& l = f->as<LamNode>();
            if (l.bound.space == Space::Interm) return isK(f, dir) && isB(arg, dir);
            if (l.bound.space == Space::Cont) return isS(f, dir) && isK(arg, dir);
            return false;  // a source abstraction is only applied inside B1B2K / BSK
        }
        case TermKind::Var:
            return dir == Direction::N2V && is_src_var(f) && isK(arg, dir);
        case TermKind::Zero:
        case TermKind::Scale:
        case TermKind::Sum:
            return isT(f, dir) && isK(arg, dir);
        case TermKind::App: {
            const auto& inner = f->as<AppNode>();
            if (dir == Direction::V2N)
                return isB(inner.fun, dir) && isB(inner.arg, dir) && isK(arg, dir);
            return isB(inner.fun, dir) && isSZ(inner.arg, dir) && isK(arg, dir);
        }
    }
    return false;
}

bool isD(const TermPtr& t, Direction dir) {
    switch (t->kind()) {
        case TermKind::Zero:
            return true;
        case TermKind::Scale:
            return isD(t->as<ScaleNode>().body, dir);
        case TermKind::Sum: {
            const auto& s = t->as<SumNode>();
            return isD(s.lhs, dir) && isD(s.rhs, dir);
        }
        default:
            return isC(t, dir);
    }
}

[[noreturn]] void reject(const char* what, const TermPtr& t) {
    throw PreconditionError(std::string(what) + ": " + print_term(t));
}

}  // namespace

GrammarClass classify(const TermPtr& m, Direction dir) {
    if (isC(m, dir)) return GrammarClass::BaseComputation;
    if (isS(m, dir)) return GrammarClass::BaseSuspension;
    if (isK(m, dir)) return GrammarClass::Continuation;
    if (isB(m, dir)) return GrammarClass::CpsValue;
    if (isD(m, dir)) return GrammarClass::Computation;
    if (isT(m, dir)) return GrammarClass::Suspension;
    return GrammarClass::None;
}

bool in_class(const TermPtr& m, GrammarClass cls, Direction dir) {
    switch (cls) {
        case GrammarClass::BaseComputation: return isC(m, dir);
        case GrammarClass::Computation: return isD(m, dir);
        case GrammarClass::BaseSuspension: return isS(m, dir);
        case GrammarClass::Suspension: return isT(m, dir);
        case GrammarClass::Continuation: return isK(m, dir);
        case GrammarClass::CpsValue: return isB(m, dir);
        case GrammarClass::None: return classify(m, dir) == GrammarClass::None;
    }
    return false;
}

TermPtr inv_value(const TermPtr& b, Direction dir) {
    if (dir == Direction::V2N && is_src_var(b)) return b;
    const auto* l = b->get_if<LamNode>();
    if (l && l->bound.space == Space::Source)
        return lam(l->bound, inv_suspension(l->body, dir));
    reject("not in the CPS-value grammar", b);
}

TermPtr inv_suspension(const TermPtr& t, Direction dir) {
    if (dir == Direction::N2V && is_src_var(t)) return t;
    switch (t->kind()) {
        case TermKind::Lam: {
            const auto& l = t->as<LamNode>();
            if (l.bound.space == Space::Cont) return inv_computation(l.body, dir);
            break;
        }
        case TermKind::Zero:
            return zero();
        case TermKind::Scale: {
            const auto& s = t->as<ScaleNode>();
            return scale(s.coeff, inv_suspension(s.body, dir));
        }
        case TermKind::Sum: {
            const auto& s = t->as<SumNode>();
            return sum(inv_suspension(s.lhs, dir), inv_suspension(s.rhs, dir));
        }
        default:
            break;
    }
    reject("not in the suspension grammar", t);
}

TermPtr inv_computation(const TermPtr& d, Direction dir) {
    switch (d->kind()) {
        case TermKind::Zero:
            return zero();
        case TermKind::Scale: {
            const auto& s = d->as<ScaleNode>();
            return scale(s.coeff, inv_computation(s.body, dir));
        }
        case TermKind::Sum: {
            const auto& s = d->as<SumNode>();
            return sum(inv_computation(s.lhs, dir), inv_computation(s.rhs, dir));
        }
        case TermKind::App: {
            const auto& a = d->as<AppNode>();
            const TermPtr& f = a.fun;
            if (is_k_leaf(f)) return inv_value(a.arg, dir);
            switch (f->kind()) {
                case TermKind::Lam: {
                    const auto& l = f->as<LamNode>();
                    if (l.bound.space == Space::Interm)
                        return apply_continuation(f, inv_value(a.arg, dir), dir);
                    if (l.bound.space == Space::Cont)
                        return apply_continuation(a.arg, inv_suspension(f, dir), dir);
                    reject("not in the computation grammar", d);
                }
                case TermKind::Var:
                    if (dir == Direction::N2V && is_src_var(f))
                        return apply_continuation(a.arg, f, dir);
                    reject("not in the computation grammar", d);
                case TermKind::Zero:
                case TermKind::Scale:
                case TermKind::Sum:
                    return apply_continuation(a.arg, inv_suspension(f, dir), dir);
                case TermKind::App: {
                    const auto& inner = f->as<AppNode>();
                    TermPtr applied =
                        dir == Direction::V2N
                            ? app(inv_value(inner.fun, dir), inv_value(inner.arg, dir))
                            : app(inv_value(inner.fun, dir), inv_suspension(inner.arg, dir));
                    return apply_continuation(a.arg, applied, dir);
                }
            }
            reject("not in the computation grammar", d);
        }
        default:
            reject("not in the computation grammar", d);
    }
}

TermPtr apply_continuation(const TermPtr& k, const TermPtr& m, Direction dir) {
    if (is_k_leaf(k)) return m;
    const auto* l = k->get_if<LamNode>();
    if (l && l->bound.space == Space::Interm) {
        const auto* body = l->body->get_if<AppNode>();
        if (body) {
            if (const auto* inner = body->fun->get_if<AppNode>()) {
                if (dir == Direction::V2N) {
                    const auto* occ = inner->arg->get_if<VarNode>();
                    if (occ && occ->name == l->bound)
                        return apply_continuation(body->arg,
                                                  app(inv_value(inner->fun, dir), m), dir);
                } else {
                    const auto* occ = inner->fun->get_if<VarNode>();
                    if (occ && occ->name == l->bound)
                        return apply_continuation(
                            body->arg, app(m, inv_suspension(inner->arg, dir)), dir);
                }
            } else if (dir == Direction::V2N) {
                const auto* wrap = body->arg->get_if<LamNode>();
                if (wrap && wrap->bound.space == Space::Interm && !(wrap->bound == l->bound)) {
                    const auto* w_body = wrap->body->get_if<AppNode>();
                    const auto* pair = w_body ? w_body->fun->get_if<AppNode>() : nullptr;
                    const auto* occ1 = pair ? pair->fun->get_if<VarNode>() : nullptr;
                    const auto* occ2 = pair ? pair->arg->get_if<VarNode>() : nullptr;
                    if (occ1 && occ1->name == l->bound && occ2 && occ2->name == wrap->bound)
                        return apply_continuation(
                            w_body->arg, app(m, inv_suspension(body->fun, dir)), dir);
                }
            }
        }
    }
    reject("not in the continuation grammar", k);
}

}  // namespace alc
