#include "alc/term.hpp"

#include <algorithm>
#include <map>

namespace alc {

VarName src_var(std::string name) { return {Space::Source, std::move(name)}; }
VarName cont_k() { return {Space::Cont, "k"}; }
VarName interm_var(std::string name) { return {Space::Interm, std::move(name)}; }

TermPtr var(VarName name) { return std::make_shared<Term>(VarNode{std::move(name)}); }
TermPtr var(const std::string& source_name) { return var(src_var(source_name)); }
TermPtr lam(VarName bound, TermPtr body) {
    return std::make_shared<Term>(LamNode{std::move(bound), std::move(body)});
}
TermPtr app(TermPtr fun, TermPtr arg) {
    return std::make_shared<Term>(AppNode{std::move(fun), std::move(arg)});
}
TermPtr zero() {
    static const TermPtr z = std::make_shared<Term>(ZeroNode{});
    return z;
}
TermPtr scale(Scalar coeff, TermPtr body) {
    return std::make_shared<Term>(ScaleNode{std::move(coeff), std::move(body)});
}
TermPtr sum(TermPtr lhs, TermPtr rhs) {
    return std::make_shared<Term>(SumNode{std::move(lhs), std::move(rhs)});
}

namespace {

void free_vars_into(const TermPtr& m, std::set<VarName>& bound_shadow,
                    std::set<VarName>& out) {
    switch (m->kind()) {
        case TermKind::Var: {
            const auto& v = m->as<VarNode>().name;
            if (!bound_shadow.count(v)) out.insert(v);
            return;
        }
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            bool fresh = bound_shadow.insert(l.bound).second;
            free_vars_into(l.body, bound_shadow, out);
            if (fresh) bound_shadow.erase(l.bound);
            return;
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            free_vars_into(a.fun, bound_shadow, out);
            free_vars_into(a.arg, bound_shadow, out);
            return;
        }
        case TermKind::Zero:
            return;
        case TermKind::Scale:
            free_vars_into(m->as<ScaleNode>().body, bound_shadow, out);
            return;
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            free_vars_into(s.lhs, bound_shadow, out);
            free_vars_into(s.rhs, bound_shadow, out);
            return;
        }
    }
}

}  // namespace

std::set<VarName> free_vars(const TermPtr& m) {
    std::set<VarName> out;
    std::set<VarName> shadow;
    free_vars_into(m, shadow, out);
    return out;
}

bool contains_var(const TermPtr& m, const VarName& v) {
    return free_vars(m).count(v) > 0;
}

namespace {

// Candidate fresh names within a namespace. Source names grow primes;
// the reserved namespaces can only fall back on their fixed alternatives.
std::vector<VarName> rename_candidates(const VarName& v) {
    std::vector<VarName> out;
    switch (v.space) {
        case Space::Source:
            for (int i = 1; i <= 64; i++) out.push_back({Space::Source, v.name + std::string(i, '\'')});
            break;
        case Space::Cont:
            break;  // `k` is the only inhabitant
        case Space::Interm:
            for (const char* n : {"b", "b1", "b2"})
                if (v.name != n) out.push_back({Space::Interm, n});
            break;
    }
    return out;
}

TermPtr subst_rec(const TermPtr& m, const VarName& x, const TermPtr& n,
                  const std::set<VarName>& fv_n) {
    switch (m->kind()) {
        case TermKind::Var:
            return m->as<VarNode>().name == x ? n : m;
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            if (l.bound == x) return m;  // shadowed
            if (fv_n.count(l.bound) && contains_var(l.body, x)) {
                // Would capture: rename the binder before descending.
                auto fv_body = free_vars(l.body);
                for (const auto& cand : rename_candidates(l.bound)) {
                    if (cand == x || fv_n.count(cand) || fv_body.count(cand)) continue;
                    TermPtr renamed = substitute(l.body, l.bound, var(cand));
                    return lam(cand, subst_rec(renamed, x, n, fv_n));
                }
                throw TermError("substitution cannot rename reserved binder '" + l.bound.name +
                                "': namespace exhausted");
            }
            return lam(l.bound, subst_rec(l.body, x, n, fv_n));
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            return app(subst_rec(a.fun, x, n, fv_n), subst_rec(a.arg, x, n, fv_n));
        }
        case TermKind::Zero:
            return m;
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            return scale(s.coeff, subst_rec(s.body, x, n, fv_n));
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            return sum(subst_rec(s.lhs, x, n, fv_n), subst_rec(s.rhs, x, n, fv_n));
        }
    }
    throw TermError("unreachable term kind");
}

}  // namespace

TermPtr substitute(const TermPtr& m, const VarName& x, const TermPtr& n) {
    return subst_rec(m, x, n, free_vars(n));
}

namespace {

bool alpha_rec(const TermPtr& a, const TermPtr& b, std::map<VarName, int>& env_a,
               std::map<VarName, int>& env_b, int& serial) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case TermKind::Var: {
            const auto& va = a->as<VarNode>().name;
            const auto& vb = b->as<VarNode>().name;
            auto ia = env_a.find(va);
            auto ib = env_b.find(vb);
            if (ia != env_a.end() || ib != env_b.end())
                return ia != env_a.end() && ib != env_b.end() && ia->second == ib->second;
            return va == vb;
        }
        case TermKind::Lam: {
            const auto& la = a->as<LamNode>();
            const auto& lb = b->as<LamNode>();
            if (la.bound.space != lb.bound.space) return false;
            int id = serial++;
            auto restore_a = env_a.find(la.bound) != env_a.end()
                                 ? std::optional<int>(env_a[la.bound]) : std::nullopt;
            auto restore_b = env_b.find(lb.bound) != env_b.end()
                                 ? std::optional<int>(env_b[lb.bound]) : std::nullopt;
            env_a[la.bound] = id;
            env_b[lb.bound] = id;
            bool ok = alpha_rec(la.body, lb.body, env_a, env_b, serial);
            if (restore_a) env_a[la.bound] = *restore_a; else env_a.erase(la.bound);
            if (restore_b) env_b[lb.bound] = *restore_b; else env_b.erase(lb.bound);
            return ok;
        }
        case TermKind::App: {
            const auto& pa = a->as<AppNode>();
            const auto& pb = b->as<AppNode>();
            return alpha_rec(pa.fun, pb.fun, env_a, env_b, serial) &&
                   alpha_rec(pa.arg, pb.arg, env_a, env_b, serial);
        }
        case TermKind::Zero:
            return true;
        case TermKind::Scale: {
            const auto& sa = a->as<ScaleNode>();
            const auto& sb = b->as<ScaleNode>();
            return sa.coeff == sb.coeff && alpha_rec(sa.body, sb.body, env_a, env_b, serial);
        }
        case TermKind::Sum: {
            const auto& sa = a->as<SumNode>();
            const auto& sb = b->as<SumNode>();
            return alpha_rec(sa.lhs, sb.lhs, env_a, env_b, serial) &&
                   alpha_rec(sa.rhs, sb.rhs, env_a, env_b, serial);
        }
    }
    return false;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    std::map<VarName, int> env_a, env_b;
    int serial = 0;
    return alpha_rec(a, b, env_a, env_b, serial);
}

bool is_base_value(const TermPtr& m) {
    return m->kind() == TermKind::Var || m->kind() == TermKind::Lam;
}

bool is_value(const TermPtr& m) {
    switch (m->kind()) {
        case TermKind::Var:
        case TermKind::Lam:
        case TermKind::Zero:
            return true;
        case TermKind::Scale:
            return is_value(m->as<ScaleNode>().body);
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            return is_value(s.lhs) && is_value(s.rhs);
        }
        case TermKind::App:
            return false;
    }
    return false;
}

namespace {

const char* space_tag(Space s) {
    switch (s) {
        case Space::Source: return "s";
        case Space::Cont: return "k";
        case Space::Interm: return "i";
    }
    return "?";
}

void key_rec(const TermPtr& m, std::map<VarName, int>& env, int& serial,
             std::string& out) {
    switch (m->kind()) {
        case TermKind::Var: {
            const auto& v = m->as<VarNode>().name;
            auto it = env.find(v);
            if (it != env.end()) {
                out += '#';
                out += std::to_string(it->second);
            } else {
                out += space_tag(v.space);
                out += ':';
                out += v.name;
            }
            return;
        }
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            out += 'L';
            out += space_tag(l.bound.space);
            out += '(';
            int id = serial++;
            auto prev = env.find(l.bound) != env.end() ? std::optional<int>(env[l.bound])
                                                       : std::nullopt;
            env[l.bound] = id;
            key_rec(l.body, env, serial, out);
            if (prev) env[l.bound] = *prev; else env.erase(l.bound);
            out += ')';
            return;
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            out += "A(";
            key_rec(a.fun, env, serial, out);
            out += ',';
            key_rec(a.arg, env, serial, out);
            out += ')';
            return;
        }
        case TermKind::Zero:
            out += 'Z';
            return;
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            out += "S[";
            out += s.coeff.str();
            out += "](";
            key_rec(s.body, env, serial, out);
            out += ')';
            return;
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            out += "P(";
            key_rec(s.lhs, env, serial, out);
            out += ',';
            key_rec(s.rhs, env, serial, out);
            out += ')';
            return;
        }
    }
}

}  // namespace

std::string nameless_key(const TermPtr& m) {
    std::string out;
    out.reserve(64);
    std::map<VarName, int> env;
    int serial = 0;
    key_rec(m, env, serial, out);
    return out;
}

namespace {

struct WeightedAtom {
    Scalar coeff;
    TermPtr atom;   // never Zero/Scale/Sum at the top
    std::string key;
};

// Flattens the linear structure, canonicalizing application-left spines of
// the atoms on the way down (the only non-linear positions the context
// rules reach).
void collect_atoms(const TermPtr& m, const Scalar& coeff, std::vector<WeightedAtom>& out) {
    switch (m->kind()) {
        case TermKind::Zero:
            return;
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            collect_atoms(s.body, coeff * s.coeff, out);
            return;
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            collect_atoms(s.lhs, coeff, out);
            collect_atoms(s.rhs, coeff, out);
            return;
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            TermPtr atom = app(canonicalize_linear(a.fun), a.arg);
            out.push_back({coeff, atom, nameless_key(atom)});
            return;
        }
        case TermKind::Var:
        case TermKind::Lam:
            out.push_back({coeff, m, nameless_key(m)});
            return;
    }
}

}  // namespace

TermPtr canonicalize_linear(const TermPtr& m) {
    std::vector<WeightedAtom> atoms;
    collect_atoms(m, Scalar(1), atoms);

    // Merge alpha-equivalent atoms, keeping the first representative.
    std::vector<WeightedAtom> merged;
    std::map<std::string, size_t> index;
    for (auto& a : atoms) {
        auto it = index.find(a.key);
        if (it == index.end()) {
            index.emplace(a.key, merged.size());
            merged.push_back(std::move(a));
        } else {
            merged[it->second].coeff = merged[it->second].coeff + a.coeff;
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const WeightedAtom& a) { return a.coeff.is_zero(); }),
                 merged.end());
    std::sort(merged.begin(), merged.end(),
              [](const WeightedAtom& a, const WeightedAtom& b) { return a.key < b.key; });

    if (merged.empty()) return zero();
    TermPtr acc;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
        TermPtr entry = it->coeff.is_one() ? it->atom : scale(it->coeff, it->atom);
        acc = acc ? sum(entry, acc) : entry;
    }
    return acc;
}

std::string linear_key(const TermPtr& m) {
    return nameless_key(canonicalize_linear(m));
}

}  // namespace alc
