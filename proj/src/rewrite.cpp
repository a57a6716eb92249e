#include "alc/rewrite.hpp"

#include "alc/syntax.hpp"

#include <algorithm>
#include <unordered_set>

namespace alc {

const char* rule_name(RuleLabel r) {
    switch (r) {
        case RuleLabel::BetaN: return "BetaN";
        case RuleLabel::BetaV: return "BetaV";
        case RuleLabel::A_app_sum: return "A_app_sum";
        case RuleLabel::A_app_scale: return "A_app_scale";
        case RuleLabel::A_app_zero: return "A_app_zero";
        case RuleLabel::Al_sum: return "Al_sum";
        case RuleLabel::Al_scale: return "Al_scale";
        case RuleLabel::Al_zero: return "Al_zero";
        case RuleLabel::Ar_sum: return "Ar_sum";
        case RuleLabel::Ar_scale: return "Ar_scale";
        case RuleLabel::Ar_zero: return "Ar_zero";
        case RuleLabel::Asso_L: return "Asso_L";
        case RuleLabel::Asso_R: return "Asso_R";
        case RuleLabel::Com: return "Com";
        case RuleLabel::F1: return "F1";
        case RuleLabel::F2: return "F2";
        case RuleLabel::F3: return "F3";
        case RuleLabel::F4: return "F4";
        case RuleLabel::S1: return "S1";
        case RuleLabel::S2: return "S2";
        case RuleLabel::S3: return "S3";
        case RuleLabel::S4: return "S4";
        case RuleLabel::S5: return "S5";
        case RuleLabel::Xi_appL: return "Xi_appL";
        case RuleLabel::Xi_sumL: return "Xi_sumL";
        case RuleLabel::Xi_sumR: return "Xi_sumR";
        case RuleLabel::Xi_scale: return "Xi_scale";
        case RuleLabel::XiLin_appR: return "XiLin_appR";
    }
    return "?";
}

bool is_linear_rule(RuleLabel r) {
    switch (r) {
        case RuleLabel::Asso_L:
        case RuleLabel::Asso_R:
        case RuleLabel::Com:
        case RuleLabel::F1:
        case RuleLabel::F2:
        case RuleLabel::F3:
        case RuleLabel::F4:
        case RuleLabel::S1:
        case RuleLabel::S2:
        case RuleLabel::S3:
        case RuleLabel::S4:
        case RuleLabel::S5:
            return true;
        default:
            return false;
    }
}

const char* relation_name(Relation r) { return r == Relation::Lin ? "lin" : "alg"; }

std::string path_str(const Path& p) {
    if (p.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < p.size(); i++) {
        if (i) out += '.';
        out += std::to_string(p[i]);
    }
    return out;
}

TermPtr subterm_at(const TermPtr& m, const Path& p) {
    TermPtr cur = m;
    for (int idx : p) {
        switch (cur->kind()) {
            case TermKind::App: {
                const auto& a = cur->as<AppNode>();
                if (idx == 0) cur = a.fun;
                else if (idx == 1) cur = a.arg;
                else throw TermError("bad path step " + std::to_string(idx) + " at application");
                break;
            }
            case TermKind::Sum: {
                const auto& s = cur->as<SumNode>();
                if (idx == 0) cur = s.lhs;
                else if (idx == 1) cur = s.rhs;
                else throw TermError("bad path step at sum");
                break;
            }
            case TermKind::Scale: {
                if (idx != 0) throw TermError("bad path step at scale");
                cur = cur->as<ScaleNode>().body;
                break;
            }
            case TermKind::Lam: {
                if (idx != 0) throw TermError("bad path step at lambda");
                cur = cur->as<LamNode>().body;
                break;
            }
            default:
                throw TermError("path descends into a leaf");
        }
    }
    return cur;
}

TermPtr replace_at(const TermPtr& m, const Path& p, const TermPtr& sub) {
    if (p.empty()) return sub;
    Path rest(p.begin() + 1, p.end());
    int idx = p.front();
    switch (m->kind()) {
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            return idx == 0 ? app(replace_at(a.fun, rest, sub), a.arg)
                            : app(a.fun, replace_at(a.arg, rest, sub));
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            return idx == 0 ? sum(replace_at(s.lhs, rest, sub), s.rhs)
                            : sum(s.lhs, replace_at(s.rhs, rest, sub));
        }
        case TermKind::Scale: {
            const auto& s = m->as<ScaleNode>();
            return scale(s.coeff, replace_at(s.body, rest, sub));
        }
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            return lam(l.bound, replace_at(l.body, rest, sub));
        }
        default:
            throw TermError("path descends into a leaf");
    }
}

namespace {

// Rule instances whose redex is the root of m. Emission order puts the
// non-linear rules first; normalize's strategy picks the first hit.
std::vector<std::pair<RuleLabel, TermPtr>> root_steps(const TermPtr& m, Relation rel) {
    std::vector<std::pair<RuleLabel, TermPtr>> out;
    if (const auto* a = m->get_if<AppNode>()) {
        const TermPtr& f = a->fun;
        const TermPtr& n = a->arg;
        if (rel == Relation::Alg) {
            if (const auto* l = f->get_if<LamNode>())
                out.push_back({RuleLabel::BetaN, substitute(l->body, l->bound, n)});
            if (const auto* s = f->get_if<SumNode>())
                out.push_back({RuleLabel::A_app_sum, sum(app(s->lhs, n), app(s->rhs, n))});
            if (const auto* s = f->get_if<ScaleNode>())
                out.push_back({RuleLabel::A_app_scale, scale(s->coeff, app(s->body, n))});
            if (f->kind() == TermKind::Zero)
                out.push_back({RuleLabel::A_app_zero, zero()});
        } else {
            if (const auto* l = f->get_if<LamNode>(); l != nullptr && is_base_value(n))
                out.push_back({RuleLabel::BetaV, substitute(l->body, l->bound, n)});
            if (is_value(n)) {
                if (const auto* s = f->get_if<SumNode>())
                    out.push_back({RuleLabel::Al_sum, sum(app(s->lhs, n), app(s->rhs, n))});
                if (const auto* s = f->get_if<ScaleNode>())
                    out.push_back({RuleLabel::Al_scale, scale(s->coeff, app(s->body, n))});
                if (f->kind() == TermKind::Zero)
                    out.push_back({RuleLabel::Al_zero, zero()});
            }
            if (is_base_value(f)) {
                if (const auto* s = n->get_if<SumNode>())
                    out.push_back({RuleLabel::Ar_sum, sum(app(f, s->lhs), app(f, s->rhs))});
                if (const auto* s = n->get_if<ScaleNode>())
                    out.push_back({RuleLabel::Ar_scale, scale(s->coeff, app(f, s->body))});
                if (n->kind() == TermKind::Zero)
                    out.push_back({RuleLabel::Ar_zero, zero()});
            }
        }
        return out;
    }
    if (const auto* s = m->get_if<SumNode>()) {
        const TermPtr& l = s->lhs;
        const TermPtr& r = s->rhs;
        if (const auto* rs = r->get_if<SumNode>())
            out.push_back({RuleLabel::Asso_L, sum(sum(l, rs->lhs), rs->rhs)});
        if (const auto* ls = l->get_if<SumNode>())
            out.push_back({RuleLabel::Asso_R, sum(ls->lhs, sum(ls->rhs, r))});
        out.push_back({RuleLabel::Com, sum(r, l)});
        const auto* lsc = l->get_if<ScaleNode>();
        const auto* rsc = r->get_if<ScaleNode>();
        if (lsc && rsc && alpha_eq(lsc->body, rsc->body))
            out.push_back({RuleLabel::F1, scale(lsc->coeff + rsc->coeff, lsc->body)});
        if (lsc && alpha_eq(lsc->body, r))
            out.push_back({RuleLabel::F2, scale(lsc->coeff + Scalar(1), lsc->body)});
        if (alpha_eq(l, r))
            out.push_back({RuleLabel::F3, scale(Scalar(1) + Scalar(1), l)});
        if (l->kind() == TermKind::Zero)
            out.push_back({RuleLabel::S5, r});
        return out;
    }
    if (const auto* s = m->get_if<ScaleNode>()) {
        const TermPtr& b = s->body;
        if (const auto* bs = b->get_if<ScaleNode>())
            out.push_back({RuleLabel::F4, scale(s->coeff * bs->coeff, bs->body)});
        if (const auto* bs = b->get_if<SumNode>())
            out.push_back({RuleLabel::S1, sum(scale(s->coeff, bs->lhs), scale(s->coeff, bs->rhs))});
        if (s->coeff.is_one())
            out.push_back({RuleLabel::S2, b});
        if (s->coeff.is_zero())
            out.push_back({RuleLabel::S3, zero()});
        if (b->kind() == TermKind::Zero)
            out.push_back({RuleLabel::S4, zero()});
        return out;
    }
    return out;
}

void collect_steps(const TermPtr& root, const TermPtr& m, Relation rel, Path& cur,
                   std::vector<Step>& out) {
    for (auto& [rule, result] : root_steps(m, rel))
        out.push_back({root, replace_at(root, cur, result), rule, cur});
    switch (m->kind()) {
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            cur.push_back(0);
            collect_steps(root, a.fun, rel, cur, out);
            cur.back() = 1;
            if (rel == Relation::Lin && is_value(a.fun))
                collect_steps(root, a.arg, rel, cur, out);
            cur.pop_back();
            return;
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            cur.push_back(0);
            collect_steps(root, s.lhs, rel, cur, out);
            cur.back() = 1;
            collect_steps(root, s.rhs, rel, cur, out);
            cur.pop_back();
            return;
        }
        case TermKind::Scale: {
            cur.push_back(0);
            collect_steps(root, m->as<ScaleNode>().body, rel, cur, out);
            cur.pop_back();
            return;
        }
        default:
            return;  // no reduction under binders or at leaves
    }
}

}  // namespace

std::vector<Step> enumerate_steps(const TermPtr& m, Relation rel) {
    std::vector<Step> out;
    Path cur;
    collect_steps(m, m, rel, cur, out);
    return out;
}

std::optional<TermPtr> apply_rule_at(const TermPtr& m, RuleLabel rule, const Path& p,
                                     Relation rel) {
    // Validate that the path stays within positions the relation's context
    // rules can reach.
    TermPtr node = m;
    for (int idx : p) {
        switch (node->kind()) {
            case TermKind::App: {
                const auto& a = node->as<AppNode>();
                if (idx == 0) { node = a.fun; break; }
                if (idx == 1 && rel == Relation::Lin && is_value(a.fun)) { node = a.arg; break; }
                return std::nullopt;
            }
            case TermKind::Sum: {
                const auto& s = node->as<SumNode>();
                if (idx == 0) { node = s.lhs; break; }
                if (idx == 1) { node = s.rhs; break; }
                return std::nullopt;
            }
            case TermKind::Scale: {
                if (idx != 0) return std::nullopt;
                node = node->as<ScaleNode>().body;
                break;
            }
            default:
                return std::nullopt;
        }
    }
    for (auto& [r, result] : root_steps(node, rel))
        if (r == rule) return replace_at(m, p, result);
    return std::nullopt;
}

std::string trace_to_text(const Trace& t) {
    std::string out = print_term(t.initial);
    out += '\n';
    for (const auto& s : t.steps) {
        out += rule_name(s.rule);
        out += " @ ";
        out += path_str(s.position);
        out += '\n';
        out += print_term(s.target);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Step-by-step realization of canonicalize_linear.

namespace {

class CanonDriver {
public:
    CanonDriver(TermPtr start, std::vector<Step>* record)
        : cur_(std::move(start)), record_(record) {}

    TermPtr result() const { return cur_; }

    void run() { canonize_region({}); }

private:
    TermPtr cur_;
    std::vector<Step>* record_;

    void fire(RuleLabel rule, const Path& p) {
        auto next = apply_rule_at(cur_, rule, p, Relation::Alg);
        if (!next)
            throw TermError("internal canonicalization step failed: " +
                            std::string(rule_name(rule)) + " @ " + path_str(p));
        if (record_) record_->push_back({cur_, *next, rule, p});
        cur_ = *next;
    }

    TermKind kind_at(const Path& p) const { return subterm_at(cur_, p)->kind(); }

    bool is_region_node(TermKind k) const {
        return k == TermKind::Sum || k == TermKind::Scale || k == TermKind::Zero;
    }

    void atom_paths(const Path& p, std::vector<Path>& out) const {
        TermPtr t = subterm_at(cur_, p);
        switch (t->kind()) {
            case TermKind::Sum: {
                Path q = p;
                q.push_back(0);
                atom_paths(q, out);
                q.back() = 1;
                atom_paths(q, out);
                return;
            }
            case TermKind::Scale: {
                Path q = p;
                q.push_back(0);
                atom_paths(q, out);
                return;
            }
            case TermKind::Zero:
                return;
            default:
                out.push_back(p);
                return;
        }
    }

    // Pre-order scan of the region's linear skeleton for a cleanup rule.
    std::optional<std::pair<RuleLabel, Path>> find_cleanup(const Path& p) const {
        TermPtr t = subterm_at(cur_, p);
        switch (t->kind()) {
            case TermKind::Scale: {
                const auto& s = t->as<ScaleNode>();
                if (s.body->kind() == TermKind::Zero) return {{RuleLabel::S4, p}};
                if (s.coeff.is_zero()) return {{RuleLabel::S3, p}};
                if (s.body->kind() == TermKind::Scale) return {{RuleLabel::F4, p}};
                if (s.body->kind() == TermKind::Sum) return {{RuleLabel::S1, p}};
                if (s.coeff.is_one()) return {{RuleLabel::S2, p}};
                Path q = p;
                q.push_back(0);
                return find_cleanup(q);
            }
            case TermKind::Sum: {
                const auto& s = t->as<SumNode>();
                if (s.lhs->kind() == TermKind::Zero) return {{RuleLabel::S5, p}};
                if (s.rhs->kind() == TermKind::Zero) return {{RuleLabel::Com, p}};
                Path q = p;
                q.push_back(0);
                if (auto r = find_cleanup(q)) return r;
                q.back() = 1;
                return find_cleanup(q);
            }
            default:
                return std::nullopt;  // atoms are opaque here
        }
    }

    std::optional<Path> find_left_nested_sum(const Path& p) const {
        TermPtr t = subterm_at(cur_, p);
        switch (t->kind()) {
            case TermKind::Sum: {
                if (t->as<SumNode>().lhs->kind() == TermKind::Sum) return p;
                Path q = p;
                q.push_back(0);
                if (auto r = find_left_nested_sum(q)) return r;
                q.back() = 1;
                return find_left_nested_sum(q);
            }
            default:
                return std::nullopt;
        }
    }

    std::vector<Path> spine_elements(const Path& p) const {
        std::vector<Path> elems;
        Path q = p;
        while (kind_at(q) == TermKind::Sum) {
            Path e = q;
            e.push_back(0);
            elems.push_back(e);
            q.push_back(1);
        }
        elems.push_back(q);
        return elems;
    }

    std::string element_atom_key(const Path& p) const {
        TermPtr t = subterm_at(cur_, p);
        if (const auto* s = t->get_if<ScaleNode>()) return nameless_key(s->body);
        return nameless_key(t);
    }

    void canonize_region(const Path& p) {
        // Atoms first: application-left spines are themselves regions.
        std::vector<Path> atoms;
        atom_paths(p, atoms);
        for (const auto& ap : atoms) {
            if (kind_at(ap) == TermKind::App) {
                Path q = ap;
                q.push_back(0);
                canonize_region(q);
            }
        }
        // Cleanup: collapse nested scales, distribute over sums, drop zeros.
        while (auto rule = find_cleanup(p)) {
            fire(rule->first, rule->second);
            // Distribution can expose fresh uncanonized atoms only by
            // copying existing (already canonical) ones, so no re-scan of
            // atom interiors is needed.
        }
        // Right-associate the sum spine.
        while (auto q = find_left_nested_sum(p)) fire(RuleLabel::Asso_R, *q);
        if (!is_region_node(kind_at(p))) return;  // single atom, done
        if (kind_at(p) == TermKind::Zero) return;
        sort_spine(p);
        merge_spine(p);
    }

    Path pair_node(const Path& p, size_t i) const {
        Path q = p;
        for (size_t j = 0; j < i; j++) q.push_back(1);
        return q;
    }

    void sort_spine(const Path& p) {
        bool swapped = true;
        while (swapped) {
            swapped = false;
            auto elems = spine_elements(p);
            for (size_t i = 0; i + 1 < elems.size(); i++) {
                if (element_atom_key(elems[i]) > element_atom_key(elems[i + 1])) {
                    Path q = pair_node(p, i);
                    if (i + 2 == elems.size()) {
                        fire(RuleLabel::Com, q);
                    } else {
                        fire(RuleLabel::Asso_L, q);
                        Path inner = q;
                        inner.push_back(0);
                        fire(RuleLabel::Com, inner);
                        fire(RuleLabel::Asso_R, q);
                    }
                    swapped = true;
                    elems = spine_elements(p);
                }
            }
        }
    }

    // Merges one adjacent pair with alpha-equal atoms; true if it merged.
    bool merge_once(const Path& p) {
        auto elems = spine_elements(p);
        for (size_t i = 0; i + 1 < elems.size(); i++) {
            if (element_atom_key(elems[i]) != element_atom_key(elems[i + 1])) continue;
            Path q = pair_node(p, i);
            bool pair_is_last = (i + 2 == elems.size());
            Path pp = q;
            if (!pair_is_last) {
                fire(RuleLabel::Asso_L, q);
                pp.push_back(0);
            }
            Path lhs = pp, rhs = pp;
            lhs.push_back(0);
            rhs.push_back(1);
            bool l_scaled = kind_at(lhs) == TermKind::Scale;
            bool r_scaled = kind_at(rhs) == TermKind::Scale;
            if (l_scaled && r_scaled) {
                fire(RuleLabel::F1, pp);
            } else if (l_scaled) {
                fire(RuleLabel::F2, pp);
            } else if (r_scaled) {
                fire(RuleLabel::Com, pp);
                fire(RuleLabel::F2, pp);
            } else {
                fire(RuleLabel::F3, pp);
            }
            const auto& merged = subterm_at(cur_, pp)->as<ScaleNode>();
            if (merged.coeff.is_one()) {
                fire(RuleLabel::S2, pp);
            } else if (merged.coeff.is_zero()) {
                fire(RuleLabel::S3, pp);
                if (!pair_is_last) {
                    fire(RuleLabel::S5, q);
                } else if (i > 0) {
                    Path par = pair_node(p, i - 1);
                    fire(RuleLabel::Com, par);
                    fire(RuleLabel::S5, par);
                }
                // i == 0 && pair_is_last: the whole region is now Zero.
            }
            return true;
        }
        return false;
    }

    void merge_spine(const Path& p) {
        while (kind_at(p) == TermKind::Sum && merge_once(p)) {}
    }
};

}  // namespace

std::pair<TermPtr, std::vector<Step>> canonical_steps(const TermPtr& m) {
    std::vector<Step> steps;
    CanonDriver d(m, &steps);
    d.run();
    return {d.result(), std::move(steps)};
}

// ---------------------------------------------------------------------------
// Breadth-first reachability.

SearchOutcome reachable(const TermPtr& start, const TermPtr& goal, Relation rel,
                        SearchOptions opt) {
    // Visited states are deduplicated up to alpha-equivalence. That is the
    // finest sound choice: identifying terms up to the linear rules as well
    // would prune states whose canonical forms agree but whose redexes
    // differ, losing real paths. Alpha-dedup already terminates on the
    // commutativity/associativity loops (their orbits are finite, and the
    // other linear rules strictly shrink terms).
    auto key_of = [&](const TermPtr& t) {
        return opt.modulo_linear ? linear_key(t) : nameless_key(t);
    };
    const std::string goal_key = key_of(goal);

    struct NodeRec {
        TermPtr term;
        long parent;
        Step step;  // step.source is parent's term
    };
    std::vector<NodeRec> nodes;
    std::unordered_set<std::string> seen;

    auto make_trace = [&](long idx) {
        Trace t;
        std::vector<Step> rev;
        for (long i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
            rev.push_back(nodes[i].step);
        std::reverse(rev.begin(), rev.end());
        t.initial = start;
        t.steps = std::move(rev);
        return t;
    };

    nodes.push_back({start, -1, {}});
    seen.insert(nameless_key(start));
    if (key_of(start) == goal_key)
        return {SearchOutcome::Status::Found, make_trace(0), 1};

    for (size_t qi = 0; qi < nodes.size(); qi++) {
        TermPtr term = nodes[qi].term;
        for (auto& s : enumerate_steps(term, rel)) {
            if (opt.linear_rules_only && !is_linear_rule(s.rule)) continue;
            std::string k = nameless_key(s.target);
            if (seen.count(k)) continue;
            bool is_goal = (key_of(s.target) == goal_key);
            if (!is_goal && nodes.size() >= opt.max_states)
                return {SearchOutcome::Status::BudgetExhausted, std::nullopt, nodes.size()};
            seen.insert(std::move(k));
            nodes.push_back({s.target, static_cast<long>(qi), s});
            if (is_goal)
                return {SearchOutcome::Status::Found, make_trace(nodes.size() - 1),
                        nodes.size()};
        }
    }
    return {SearchOutcome::Status::Unreachable, std::nullopt, nodes.size()};
}

// ---------------------------------------------------------------------------
// Practical normalizer.

namespace {

std::optional<std::pair<RuleLabel, Path>> find_nonlinear_redex(const TermPtr& m,
                                                               Relation rel, Path& cur) {
    for (auto& [rule, result] : root_steps(m, rel)) {
        (void)result;
        if (!is_linear_rule(rule)) return {{rule, cur}};
    }
    switch (m->kind()) {
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            cur.push_back(0);
            if (auto r = find_nonlinear_redex(a.fun, rel, cur)) return r;
            cur.back() = 1;
            if (rel == Relation::Lin && is_value(a.fun))
                if (auto r = find_nonlinear_redex(a.arg, rel, cur)) return r;
            cur.pop_back();
            return std::nullopt;
        }
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            cur.push_back(0);
            if (auto r = find_nonlinear_redex(s.lhs, rel, cur)) return r;
            cur.back() = 1;
            if (auto r = find_nonlinear_redex(s.rhs, rel, cur)) return r;
            cur.pop_back();
            return std::nullopt;
        }
        case TermKind::Scale: {
            cur.push_back(0);
            if (auto r = find_nonlinear_redex(m->as<ScaleNode>().body, rel, cur)) return r;
            cur.pop_back();
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

NormalizeOutcome normalize(const TermPtr& m, Relation rel, size_t max_steps,
                           bool record_trace) {
    NormalizeOutcome out;
    out.trace.initial = m;
    TermPtr cur = m;
    while (true) {
        if (record_trace) {
            auto [canon, steps] = canonical_steps(cur);
            for (auto& s : steps) out.trace.steps.push_back(std::move(s));
            cur = canon;
        } else {
            cur = canonicalize_linear(cur);
        }
        if (is_value(cur)) {
            out.status = NormalizeOutcome::Status::Value;
            out.term = cur;
            return out;
        }
        Path where;
        auto redex = find_nonlinear_redex(cur, rel, where);
        if (!redex) {
            out.status = NormalizeOutcome::Status::Stuck;
            out.term = cur;
            return out;
        }
        if (out.rule_steps >= max_steps) {
            out.status = NormalizeOutcome::Status::Timeout;
            out.term = cur;
            return out;
        }
        auto next = apply_rule_at(cur, redex->first, redex->second, rel);
        if (!next) throw TermError("internal: normalize redex failed to replay");
        if (record_trace) out.trace.steps.push_back({cur, *next, redex->first, redex->second});
        cur = *next;
        out.rule_steps++;
    }
}

}  // namespace alc
