#include "alc/cps.hpp"

#include "alc/inverse.hpp"
#include "alc/syntax.hpp"

namespace alc {

const char* direction_name(Direction d) { return d == Direction::V2N ? "v2n" : "n2v"; }

namespace {

const VarName kK = cont_k();
const VarName kB = interm_var("b");
const VarName kB1 = interm_var("b1");
const VarName kB2 = interm_var("b2");

void require_source_only(const TermPtr& m) {
    switch (m->kind()) {
        case TermKind::Var:
            if (m->as<VarNode>().name.space != Space::Source)
                throw PreconditionError("source term mentions reserved variable '" +
                                        m->as<VarNode>().name.name + "'");
            return;
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            if (l.bound.space != Space::Source)
                throw PreconditionError("source term binds reserved variable '" +
                                        l.bound.name + "'");
            require_source_only(l.body);
            return;
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            require_source_only(a.fun);
            require_source_only(a.arg);
            return;
        }
        case TermKind::Zero:
            return;
        case TermKind::Scale:
            require_source_only(m->as<ScaleNode>().body);
            return;
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            require_source_only(s.lhs);
            require_source_only(s.rhs);
            return;
        }
    }
}

TermPtr cps_rec(const TermPtr& m, Direction dir) {
    switch (m->kind()) {
        case TermKind::Var:
            return dir == Direction::V2N ? lam(kK, app(var(kK), m)) : m;
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            return lam(kK, app(var(kK), lam(l.bound, cps_rec(l.body, dir))));
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            if (dir == Direction::V2N) {
                TermPtr inner = lam(kB2, app(app(var(kB1), var(kB2)), var(kK)));
                return lam(kK, app(cps_rec(a.fun, dir), lam(kB1, app(cps_rec(a.arg, dir), inner))));
            }
            return lam(kK, app(cps_rec(a.fun, dir),
                               lam(kB, app(app(var(kB), cps_rec(a.arg, dir)), var(kK)))));
        }
        case TermKind::Zero:
            return zero();
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            return lam(kK, app(scale(s.coeff, cps_rec(s.body, dir)), var(kK)));
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            return lam(kK, app(sum(cps_rec(s.lhs, dir), cps_rec(s.rhs, dir)), var(kK)));
        }
    }
    throw PreconditionError("unreachable term kind");
}

TermPtr colon_v2n(const TermPtr& m, const TermPtr& k);
TermPtr colon_n2v(const TermPtr& m, const TermPtr& k);

TermPtr colon_v2n(const TermPtr& m, const TermPtr& k) {
    if (is_base_value(m)) return app(k, psi(m));
    switch (m->kind()) {
        case TermKind::Zero:
            return zero();
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            return scale(s.coeff, colon_v2n(s.body, k));
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            return sum(colon_v2n(s.lhs, k), colon_v2n(s.rhs, k));
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            const TermPtr& f = a.fun;
            const TermPtr& n = a.arg;
            if (is_base_value(f))
                return colon_v2n(n, lam(kB, app(app(psi(f), var(kB)), k)));
            switch (f->kind()) {
                case TermKind::App: {
                    TermPtr inner = lam(kB2, app(app(var(kB1), var(kB2)), k));
                    return colon_v2n(f, lam(kB1, app(cps_rec(n, Direction::V2N), inner)));
                }
                case TermKind::Zero:
                    return zero();
                case TermKind::Scale: {
                    const auto& s = f->as<ScaleNode>();
                    return scale(s.coeff, colon_v2n(app(s.body, n), k));
                }
                case TermKind::Sum: {
                    const auto& s = f->as<SumNode>();
                    return sum(colon_v2n(app(s.lhs, n), k), colon_v2n(app(s.rhs, n), k));
                }
                default:
                    throw PreconditionError("unreachable application shape");
            }
        }
        default:
            throw PreconditionError("unreachable term kind");
    }
}

TermPtr colon_n2v(const TermPtr& m, const TermPtr& k) {
    switch (m->kind()) {
        case TermKind::Lam:
            return app(k, phi(m));
        case TermKind::Var:
            return app(m, k);
        case TermKind::Zero:
            return zero();
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            return scale(s.coeff, colon_n2v(s.body, k));
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            return sum(colon_n2v(s.lhs, k), colon_n2v(s.rhs, k));
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            const TermPtr& f = a.fun;
            const TermPtr& n = a.arg;
            switch (f->kind()) {
                case TermKind::Lam:
                    return app(app(phi(f), cps_rec(n, Direction::N2V)), k);
                case TermKind::Var:
                    return app(f, lam(kB, app(app(var(kB), cps_rec(n, Direction::N2V)), k)));
                case TermKind::App:
                    return colon_n2v(f, lam(kB, app(app(var(kB), cps_rec(n, Direction::N2V)), k)));
                case TermKind::Zero:
                    return zero();
                case TermKind::Scale: {
                    const auto& s = f->as<ScaleNode>();
                    return scale(s.coeff, colon_n2v(app(s.body, n), k));
                }
                case TermKind::Sum: {
                    const auto& s = f->as<SumNode>();
                    return sum(colon_n2v(app(s.lhs, n), k), colon_n2v(app(s.rhs, n), k));
                }
            }
            throw PreconditionError("unreachable application shape");
        }
    }
    throw PreconditionError("unreachable term kind");
}

}  // namespace

TermPtr cps(const TermPtr& m, Direction dir) {
    require_source_only(m);
    return cps_rec(m, dir);
}

TermPtr psi(const TermPtr& base_value) {
    if (base_value->kind() == TermKind::Var) {
        require_source_only(base_value);
        return base_value;
    }
    if (const auto* l = base_value->get_if<LamNode>()) {
        require_source_only(base_value);
        return lam(l->bound, cps_rec(l->body, Direction::V2N));
    }
    throw PreconditionError("psi expects a base value, got: " + print_term(base_value));
}

TermPtr phi(const TermPtr& abstraction) {
    if (const auto* l = abstraction->get_if<LamNode>()) {
        require_source_only(abstraction);
        return lam(l->bound, cps_rec(l->body, Direction::N2V));
    }
    throw PreconditionError("phi expects an abstraction, got: " + print_term(abstraction));
}

TermPtr colon(const TermPtr& m, const TermPtr& k, Direction dir) {
    require_source_only(m);
    if (!in_class(k, GrammarClass::Continuation, dir))
        throw PreconditionError("colon translation needs a continuation-class K, got: " +
                                print_term(k));
    return dir == Direction::V2N ? colon_v2n(m, k) : colon_n2v(m, k);
}

}  // namespace alc
