#include "alc/harness.hpp"

#include "alc/syntax.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace alc {

GenConfig GenConfig::defaults() {
    GenConfig cfg;
    cfg.scalar_pool = {Scalar(0), Scalar(1), Scalar(2), Scalar::ratio(1, 2), Scalar(-1)};
    cfg.var_pool = {src_var("x"), src_var("y"), src_var("z"), src_var("f"), src_var("w")};
    return cfg;
}

TermPtr gen_term(const GenConfig& cfg, Rng& rng) {
    return gen_term_depth(cfg, rng, cfg.max_depth, cfg.value_only);
}

TermPtr gen_term_depth(const GenConfig& cfg, Rng& rng, int depth, bool value_only) {
    const GenWeights& w = cfg.weights;
    if (depth <= 0) {
        if (value_only || rng.chance(5, 6)) return var(rng.pick(cfg.var_pool));
        return zero();
    }
    int app_w = value_only ? 0 : w.app;
    int total = w.var + w.lam + app_w + w.zero + w.scale + w.sum;
    long r = static_cast<long>(rng.below(total));
    if ((r -= w.var) < 0) return var(rng.pick(cfg.var_pool));
    if ((r -= w.lam) < 0)
        return lam(rng.pick(cfg.var_pool), gen_term_depth(cfg, rng, depth - 1, false));
    if ((r -= app_w) < 0)
        return app(gen_term_depth(cfg, rng, depth - 1, false),
                   gen_term_depth(cfg, rng, depth - 1, false));
    if ((r -= w.zero) < 0) return zero();
    if ((r -= w.scale) < 0)
        return scale(rng.pick(cfg.scalar_pool), gen_term_depth(cfg, rng, depth - 1, value_only));
    return sum(gen_term_depth(cfg, rng, depth - 1, value_only),
               gen_term_depth(cfg, rng, depth - 1, value_only));
}

// --------------------------------------------------------------------------
// Grammar-class generators.

TermPtr gen_cps_value(const GenConfig& cfg, Rng& rng, Direction dir, int depth) {
    if (dir == Direction::V2N && (depth <= 0 || rng.chance(1, 2)))
        return var(rng.pick(cfg.var_pool));
    if (rng.chance(1, 8)) return lam(rng.pick(cfg.var_pool), zero());  // image of \x.0
    return lam(rng.pick(cfg.var_pool),
               gen_base_suspension(cfg, rng, dir, depth - 1));
}

TermPtr gen_base_suspension(const GenConfig& cfg, Rng& rng, Direction dir, int depth) {
    if (dir == Direction::N2V && (depth <= 0 || rng.chance(1, 2)))
        return var(rng.pick(cfg.var_pool));
    return lam(cont_k(), gen_base_computation(cfg, rng, dir, depth - 1));
}

TermPtr gen_suspension(const GenConfig& cfg, Rng& rng, Direction dir, int depth) {
    if (depth <= 0) return gen_base_suspension(cfg, rng, dir, 0);
    switch (rng.below(6)) {
        case 0:
            return zero();
        case 1:
            return scale(rng.pick(cfg.scalar_pool), gen_suspension(cfg, rng, dir, depth - 1));
        case 2:
        case 3:
            return sum(gen_suspension(cfg, rng, dir, depth - 1),
                       gen_suspension(cfg, rng, dir, depth - 1));
        default:
            return gen_base_suspension(cfg, rng, dir, depth);
    }
}

TermPtr gen_continuation(const GenConfig& cfg, Rng& rng, Direction dir, int depth) {
    if (depth <= 0 || rng.chance(1, 3)) return var(cont_k());
    if (dir == Direction::N2V || rng.chance(1, 2)) {
        VarName b = interm_var("b");
        TermPtr slot = dir == Direction::V2N ? gen_cps_value(cfg, rng, dir, depth - 1)
                                             : gen_base_suspension(cfg, rng, dir, depth - 1);
        if (dir == Direction::N2V && rng.chance(1, 8)) slot = zero();  // image of L 0
        TermPtr tail = gen_continuation(cfg, rng, dir, depth - 1);
        TermPtr body = dir == Direction::V2N ? app(app(slot, var(b)), tail)
                                             : app(app(var(b), slot), tail);
        return lam(b, body);
    }
    VarName b1 = interm_var("b1");
    VarName b2 = interm_var("b2");
    TermPtr t_slot = gen_suspension(cfg, rng, dir, depth - 1);
    TermPtr tail = gen_continuation(cfg, rng, dir, depth - 1);
    return lam(b1, app(t_slot, lam(b2, app(app(var(b1), var(b2)), tail))));
}

TermPtr gen_base_computation(const GenConfig& cfg, Rng& rng, Direction dir, int depth) {
    int d = depth > 0 ? depth : 0;
    switch (rng.below(3)) {
        case 0:
            return app(gen_continuation(cfg, rng, dir, d), gen_cps_value(cfg, rng, dir, d));
        case 1:
            if (dir == Direction::V2N)
                return app(app(gen_cps_value(cfg, rng, dir, d), gen_cps_value(cfg, rng, dir, d)),
                           gen_continuation(cfg, rng, dir, d));
            return app(app(gen_cps_value(cfg, rng, dir, d), gen_base_suspension(cfg, rng, dir, d)),
                       gen_continuation(cfg, rng, dir, d));
        default:
            return app(gen_suspension(cfg, rng, dir, d), gen_continuation(cfg, rng, dir, d));
    }
}

// --------------------------------------------------------------------------
// Coverage.

namespace {

size_t label_index(RuleLabel r) { return static_cast<size_t>(r); }

}  // namespace

void Coverage::note(const Step& s) {
    counts[label_index(s.rule)]++;
    TermPtr cur = s.source;
    for (int idx : s.position) {
        switch (cur->kind()) {
            case TermKind::App: {
                const auto& a = cur->as<AppNode>();
                counts[label_index(idx == 0 ? RuleLabel::Xi_appL : RuleLabel::XiLin_appR)]++;
                cur = idx == 0 ? a.fun : a.arg;
                break;
            }
            case TermKind::Sum: {
                const auto& ss = cur->as<SumNode>();
                counts[label_index(idx == 0 ? RuleLabel::Xi_sumL : RuleLabel::Xi_sumR)]++;
                cur = idx == 0 ? ss.lhs : ss.rhs;
                break;
            }
            case TermKind::Scale:
                counts[label_index(RuleLabel::Xi_scale)]++;
                cur = cur->as<ScaleNode>().body;
                break;
            default:
                return;
        }
    }
}

void Coverage::note_all(const std::vector<Step>& steps) {
    for (const auto& s : steps) note(s);
}

bool Coverage::all_covered() const {
    return std::all_of(counts.begin(), counts.end(), [](long c) { return c > 0; });
}

std::vector<std::string> Coverage::missing() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < counts.size(); i++)
        if (counts[i] == 0) out.push_back(rule_name(static_cast<RuleLabel>(i)));
    return out;
}

std::string Coverage::summary() const {
    std::ostringstream os;
    for (size_t i = 0; i < counts.size(); i++) {
        if (i) os << ' ';
        os << rule_name(static_cast<RuleLabel>(i)) << '=' << counts[i];
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Check plumbing.

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Relation source_rel(Direction d) { return d == Direction::V2N ? Relation::Lin : Relation::Alg; }
Relation target_rel(Direction d) { return d == Direction::V2N ? Relation::Alg : Relation::Lin; }

TermPtr k_leaf() { return var(cont_k()); }

void all_subterms_into(const TermPtr& t, std::vector<TermPtr>& out) {
    out.push_back(t);
    switch (t->kind()) {
        case TermKind::Lam:
            all_subterms_into(t->as<LamNode>().body, out);
            return;
        case TermKind::App: {
            const auto& a = t->as<AppNode>();
            all_subterms_into(a.fun, out);
            all_subterms_into(a.arg, out);
            return;
        }
        case TermKind::Scale:
            all_subterms_into(t->as<ScaleNode>().body, out);
            return;
        case TermKind::Sum: {
            const auto& s = t->as<SumNode>();
            all_subterms_into(s.lhs, out);
            all_subterms_into(s.rhs, out);
            return;
        }
        default:
            return;
    }
}

std::vector<TermPtr> shrink_candidates(const TermPtr& t) {
    std::vector<TermPtr> out;
    switch (t->kind()) {
        case TermKind::Lam:
            out.push_back(t->as<LamNode>().body);
            break;
        case TermKind::App:
            out.push_back(t->as<AppNode>().fun);
            out.push_back(t->as<AppNode>().arg);
            break;
        case TermKind::Scale:
            out.push_back(t->as<ScaleNode>().body);
            break;
        case TermKind::Sum:
            out.push_back(t->as<SumNode>().lhs);
            out.push_back(t->as<SumNode>().rhs);
            break;
        default:
            break;
    }
    if (t->kind() != TermKind::Zero) out.push_back(zero());
    if (t->kind() != TermKind::Var) out.push_back(var("x"));
    return out;
}

// Greedy structural shrink: keeps replacing the term by a failing candidate
// until nothing smaller still fails. `fails` must be total (return false on
// invalid candidates).
TermPtr shrink_term(TermPtr seed, const std::function<bool(const TermPtr&)>& fails,
                    int max_evals = 120) {
    bool improved = true;
    while (improved && max_evals > 0) {
        improved = false;
        for (const auto& cand : shrink_candidates(seed)) {
            if (max_evals-- <= 0) break;
            bool f = false;
            try {
                f = fails(cand);
            } catch (const std::exception&) {
                f = false;
            }
            if (f) {
                seed = cand;
                improved = true;
                break;
            }
        }
    }
    return seed;
}

struct CheckContext {
    const GenConfig& cfg;
    const Budgets& budgets;
    Coverage& cov;
    CheckReport report;
    Rng rng;
    Direction dir = Direction::V2N;
    int instance = 0;
    int shrunk_failures = 0;

    CheckContext(const std::string& name, const GenConfig& cfg, const Budgets& budgets,
                 Coverage& cov)
        : cfg(cfg), budgets(budgets), cov(cov), rng(cfg.seed ^ fnv1a(name)) {
        report.name = name;
    }

    std::string where() const {
        std::ostringstream os;
        os << report.name << '/' << direction_name(dir) << " instance " << instance
           << " (seed " << cfg.seed << ')';
        return os.str();
    }

    void fail(const std::string& detail) {
        report.failures.push_back({detail, where()});
    }

    SearchOptions search_opts() const {
        SearchOptions o;
        o.max_states = budgets.search_states;
        return o;
    }

    // Evaluates one reachability claim; returns true when conclusive.
    void expect_reachable(const TermPtr& from, const TermPtr& to, Relation rel,
                          const std::string& what) {
        auto out = reachable(from, to, rel, search_opts());
        if (out.found()) {
            cov.note_all(out.witness->steps);
            return;
        }
        if (out.status == SearchOutcome::Status::BudgetExhausted) {
            report.inconclusive++;
            return;
        }
        fail(what + ": " + print_term(from) + "  -/->*  " + print_term(to) + " [" +
             relation_name(rel) + ", closure of " + std::to_string(out.states) +
             " states exhausted]");
    }
};

TermPtr gen_source(CheckContext& c, int depth) {
    return gen_term_depth(c.cfg, c.rng, depth, false);
}

// ---------------------------------------------------------------------------
// Directed witnesses for the simulation claims. Breadth-first search
// suffices in principle, but the CPS image of a wide sum makes the frontier
// explode on interleavings, so the checks first build the witness the way
// the soundness argument does: collapse the administrative redexes onto the
// colon image, then mirror each source step through the colon translation.
// Every constructed move is replayed through apply_rule_at, so a bug here
// degrades to the BFS fallback rather than a bogus verdict.

using RuleApps = std::vector<std::pair<RuleLabel, Path>>;

RuleLabel beta_label(Direction dir) {
    return dir == Direction::V2N ? RuleLabel::BetaN : RuleLabel::BetaV;
}
RuleLabel a_sum_label(Direction dir) {
    return dir == Direction::V2N ? RuleLabel::A_app_sum : RuleLabel::Al_sum;
}
RuleLabel a_scale_label(Direction dir) {
    return dir == Direction::V2N ? RuleLabel::A_app_scale : RuleLabel::Al_scale;
}
RuleLabel a_zero_label(Direction dir) {
    return dir == Direction::V2N ? RuleLabel::A_app_zero : RuleLabel::Al_zero;
}

void collapse_app_into(const TermPtr& f, const TermPtr& n, Direction dir, RuleApps& out,
                       const Path& at);

// Rule applications collapsing the administrative redexes of the
// translation image applied to a continuation: they take the subterm at
// `at`, currently of the shape cps(m) K, to colon(m, K). This mirrors the
// case analysis of the colon translation itself.
void collapse_into(const TermPtr& m, Direction dir, RuleApps& out, const Path& at) {
    switch (m->kind()) {
        case TermKind::Var:
            if (dir == Direction::V2N) out.push_back({beta_label(dir), at});
            return;  // n2v: x K is already the colon image
        case TermKind::Lam:
            out.push_back({beta_label(dir), at});
            return;
        case TermKind::Zero:
            out.push_back({a_zero_label(dir), at});
            return;
        case TermKind::Scale: {
            out.push_back({beta_label(dir), at});
            out.push_back({a_scale_label(dir), at});
            Path under = at;
            under.push_back(0);
            collapse_into(m->as<ScaleNode>().body, dir, out, under);
            return;
        }
        case TermKind::Sum: {
            out.push_back({beta_label(dir), at});
            out.push_back({a_sum_label(dir), at});
            Path left = at, right = at;
            left.push_back(0);
            right.push_back(1);
            collapse_into(m->as<SumNode>().lhs, dir, out, left);
            collapse_into(m->as<SumNode>().rhs, dir, out, right);
            return;
        }
        case TermKind::App: {
            const auto& a = m->as<AppNode>();
            out.push_back({beta_label(dir), at});
            collapse_app_into(a.fun, a.arg, dir, out, at);
            return;
        }
    }
}

// Continues the collapse once the subterm at `at` has the shape cps(f) K',
// K' being the continuation the translation built around the argument n.
void collapse_app_into(const TermPtr& f, const TermPtr& n, Direction dir, RuleApps& out,
                       const Path& at) {
    switch (f->kind()) {
        case TermKind::Var:
            if (dir == Direction::V2N) {
                // (\k.k f) K' -> K' f -> cps(n) (\b2.f b2 K): recurse on n
                out.push_back({beta_label(dir), at});
                out.push_back({beta_label(dir), at});
                collapse_into(n, dir, out, at);
            }
            return;  // n2v: x K' is the colon image of x n
        case TermKind::Lam:
            out.push_back({beta_label(dir), at});
            out.push_back({beta_label(dir), at});
            if (dir == Direction::V2N) collapse_into(n, dir, out, at);
            return;  // n2v stops at phi(f) {|n|} K
        case TermKind::Zero:
            out.push_back({a_zero_label(dir), at});
            return;
        case TermKind::Scale: {
            out.push_back({beta_label(dir), at});
            out.push_back({a_scale_label(dir), at});
            Path under = at;
            under.push_back(0);
            collapse_app_into(f->as<ScaleNode>().body, n, dir, out, under);
            return;
        }
        case TermKind::Sum: {
            out.push_back({beta_label(dir), at});
            out.push_back({a_sum_label(dir), at});
            Path left = at, right = at;
            left.push_back(0);
            right.push_back(1);
            collapse_app_into(f->as<SumNode>().lhs, n, dir, out, left);
            collapse_app_into(f->as<SumNode>().rhs, n, dir, out, right);
            return;
        }
        case TermKind::App: {
            const auto& a = f->as<AppNode>();
            out.push_back({beta_label(dir), at});
            collapse_app_into(a.fun, a.arg, dir, out, at);
            return;
        }
    }
}

void prefix_paths(std::optional<RuleApps>& moves, int idx) {
    if (!moves) return;
    for (auto& [rule, path] : *moves) path.insert(path.begin(), idx);
}

std::optional<RuleApps> append_moves(std::optional<RuleApps> a, std::optional<RuleApps> b) {
    if (!a || !b) return std::nullopt;
    a->insert(a->end(), b->begin(), b->end());
    return a;
}

Path path_tail(const Path& p, size_t drop = 1) {
    return Path(p.begin() + drop, p.end());
}

// Rule applications taking colon(m, k) to colon(m', k) in the target
// calculus, where m -> m' by `rule` at `p`. Returns nullopt where the
// simulation genuinely has no mirror (a call-by-name beta whose argument
// translation is 0: 0 is not a base value, so the target cannot substitute).
std::optional<RuleApps> mirror_moves(const TermPtr& m, RuleLabel rule, const Path& p,
                                     const TermPtr& k, Direction dir) {
    switch (m->kind()) {
        case TermKind::Sum: {
            const auto& s = m->as<SumNode>();
            if (p.empty()) return RuleApps{{rule, {}}};  // linear rule, homomorphic image
            auto sub = mirror_moves(p[0] == 0 ? s.lhs : s.rhs, rule, path_tail(p), k, dir);
            prefix_paths(sub, p[0]);
            return sub;
        }
        case TermKind::Scale: {
            if (p.empty()) return RuleApps{{rule, {}}};
            auto sub = mirror_moves(m->as<ScaleNode>().body, rule, path_tail(p), k, dir);
            prefix_paths(sub, 0);
            return sub;
        }
        case TermKind::App:
            break;  // handled below
        default:
            return std::nullopt;  // values and 0 have no reducts
    }

    const auto& a = m->as<AppNode>();
    const TermPtr& f = a.fun;
    const TermPtr& n = a.arg;

    if (p.empty()) {
        switch (rule) {
            case RuleLabel::BetaV: {
                // colon(M,K) = (\b.psi(F) b K) psi(N); two betas reach the
                // translation of the contractum applied to K, then the
                // administrative collapse runs.
                RuleApps out{{RuleLabel::BetaN, {}}, {RuleLabel::BetaN, {0}}};
                TermPtr reduced = substitute(f->as<LamNode>().body, f->as<LamNode>().bound, n);
                collapse_into(reduced, dir, out, {});
                return out;
            }
            case RuleLabel::BetaN: {
                // colon(M,K) = phi(F) {|N|} K; one beta if {|N|} is a base
                // value, which fails exactly for N = 0.
                if (!is_base_value(cps(n, dir))) return std::nullopt;
                RuleApps out{{RuleLabel::BetaV, {0}}};
                TermPtr reduced = substitute(f->as<LamNode>().body, f->as<LamNode>().bound, n);
                collapse_into(reduced, dir, out, {});
                return out;
            }
            default:
                // The application-linearity rules are pre-collapsed by the
                // colon translation: zero target steps.
                return RuleApps{};
        }
    }

    if (p[0] == 0) {
        // Step at or inside the function part.
        if (f->kind() == TermKind::App) {
            TermPtr k3;
            if (dir == Direction::V2N) {
                VarName b1 = interm_var("b1"), b2 = interm_var("b2");
                k3 = lam(b1, app(cps(n, dir), lam(b2, app(app(var(b1), var(b2)), k))));
            } else {
                VarName b = interm_var("b");
                k3 = lam(b, app(app(var(b), cps(n, dir)), k));
            }
            return mirror_moves(f, rule, path_tail(p), k3, dir);
        }
        if (p.size() == 1) return RuleApps{{rule, {}}};  // linear rule at the function
        if (const auto* fs = f->get_if<SumNode>()) {
            int side = p[1];
            auto sub = mirror_moves(app(side == 0 ? fs->lhs : fs->rhs, n), rule,
                                    [&] {
                                        Path q = path_tail(p, 2);
                                        q.insert(q.begin(), 0);
                                        return q;
                                    }(),
                                    k, dir);
            prefix_paths(sub, side);
            return sub;
        }
        if (const auto* fc = f->get_if<ScaleNode>()) {
            if (p[1] != 0) return std::nullopt;
            auto sub = mirror_moves(app(fc->body, n), rule,
                                    [&] {
                                        Path q = path_tail(p, 2);
                                        q.insert(q.begin(), 0);
                                        return q;
                                    }(),
                                    k, dir);
            prefix_paths(sub, 0);
            return sub;
        }
        return std::nullopt;
    }

    // Step inside the argument (call-by-value context rule; the function is
    // a value there).
    if (dir != Direction::V2N) return std::nullopt;
    if (is_base_value(f)) {
        VarName b = interm_var("b");
        TermPtr k2 = lam(b, app(app(psi(f), var(b)), k));
        return mirror_moves(n, rule, path_tail(p), k2, dir);
    }
    switch (f->kind()) {
        case TermKind::Zero:
            return RuleApps{};  // colon((0)N, K) = 0 on both sides
        case TermKind::Scale: {
            auto sub = mirror_moves(app(f->as<ScaleNode>().body, n), rule, p, k, dir);
            prefix_paths(sub, 0);
            return sub;
        }
        case TermKind::Sum: {
            const auto& fs = f->as<SumNode>();
            auto left = mirror_moves(app(fs.lhs, n), rule, p, k, dir);
            prefix_paths(left, 0);
            auto right = mirror_moves(app(fs.rhs, n), rule, p, k, dir);
            prefix_paths(right, 1);
            return append_moves(std::move(left), std::move(right));
        }
        default:
            return std::nullopt;
    }
}

// Replays rule applications from `start`; nullopt on any mismatch.
std::optional<std::vector<Step>> replay_moves(const TermPtr& start, const RuleApps& moves,
                                              Relation rel) {
    std::vector<Step> out;
    TermPtr cur = start;
    for (const auto& [rule, path] : moves) {
        auto next = apply_rule_at(cur, rule, path, rel);
        if (!next) return std::nullopt;
        out.push_back({cur, *next, rule, path});
        cur = *next;
    }
    return out;
}

// Constructed, replayed and verified witness for cps(m) k ->* colon(m, k).
std::optional<std::vector<Step>> collapse_witness(const TermPtr& m, Direction dir) {
    RuleApps moves;
    collapse_into(m, dir, moves, {});
    TermPtr start = app(cps(m, dir), var(cont_k()));
    auto steps = replay_moves(start, moves, target_rel(dir));
    if (!steps) return std::nullopt;
    TermPtr end = steps->empty() ? start : steps->back().target;
    if (!alpha_eq(end, colon(m, var(cont_k()), dir))) return std::nullopt;
    return steps;
}

// Builds and verifies the full target-side witness for a normalize trace:
// collapse to the colon image, then mirror every source step. Returns the
// replayed steps or nullopt (mirror gap or any replay mismatch).
std::optional<std::vector<Step>> simulate_trace(const TermPtr& m, const Trace& source_trace,
                                                const TermPtr& goal_colon, Direction dir) {
    Relation rel = target_rel(dir);
    auto out = collapse_witness(m, dir);
    if (!out) return std::nullopt;
    TermPtr cur = out->empty() ? app(cps(m, dir), var(cont_k())) : out->back().target;
    for (const auto& s : source_trace.steps) {
        auto moves = mirror_moves(s.source, s.rule, s.position, var(cont_k()), dir);
        if (!moves) return std::nullopt;
        for (const auto& [rule, path] : *moves) {
            auto next = apply_rule_at(cur, rule, path, rel);
            if (!next) return std::nullopt;
            out->push_back({cur, *next, rule, path});
            cur = *next;
        }
        if (!alpha_eq(cur, colon(s.target, var(cont_k()), dir))) return std::nullopt;
    }
    if (!alpha_eq(cur, goal_colon)) return std::nullopt;
    return out;
}

TermPtr gen_value(CheckContext& c, int depth) {
    return gen_term_depth(c.cfg, c.rng, depth, true);
}

// Translated-image computation: cps image applied to k, advanced by a short
// random walk in the target relation.
TermPtr gen_computation_by_walk(CheckContext& c, Direction dir, int walk_len) {
    TermPtr m = gen_source(c, c.cfg.max_depth);
    TermPtr d = app(cps(m, dir), k_leaf());
    for (int i = 0; i < walk_len; i++) {
        auto steps = enumerate_steps(d, target_rel(dir));
        if (steps.empty()) break;
        const Step& s = steps[c.rng.below(steps.size())];
        c.cov.note(s);
        d = s.target;
    }
    return d;
}

using InstanceFn = std::function<void(CheckContext&)>;

CheckReport run_directional(const std::string& name, const GenConfig& cfg,
                            const Budgets& budgets, Coverage& cov, int instances,
                            const InstanceFn& one) {
    CheckContext c(name, cfg, budgets, cov);
    int per_dir = (instances + 1) / 2;
    for (Direction dir : {Direction::V2N, Direction::N2V}) {
        c.dir = dir;
        for (int i = 0; i < per_dir; i++) {
            c.instance = i;
            c.report.attempted++;
            try {
                one(c);
            } catch (const std::exception& e) {
                c.fail(std::string("unexpected error: ") + e.what());
            }
        }
    }
    return c.report;
}

// --------------------------------------------------------------------------
// The individual lemma checks.

void do_inverse_term(CheckContext& c) {
    TermPtr m = gen_source(c, c.cfg.max_depth);
    TermPtr d = app(cps(m, c.dir), k_leaf());
    TermPtr back = inv_computation(d, c.dir);
    if (alpha_eq(back, m)) return;
    Direction dir = c.dir;
    TermPtr small = shrink_term(m, [dir](const TermPtr& t) {
        return !alpha_eq(inv_computation(app(cps(t, dir), k_leaf()), dir), t);
    });
    c.fail("inverse of the translated term differs: " + print_term(small) + " came back as " +
           print_term(inv_computation(app(cps(small, dir), k_leaf()), dir)));
}

void do_inverse_value(CheckContext& c) {
    TermPtr v = gen_value(c, c.cfg.max_depth);
    TermPtr back = inv_computation(colon(v, k_leaf(), c.dir), c.dir);
    if (alpha_eq(back, v)) return;
    Direction dir = c.dir;
    TermPtr small = shrink_term(v, [dir](const TermPtr& t) {
        return is_value(t) &&
               !alpha_eq(inv_computation(colon(t, k_leaf(), dir), dir), t);
    });
    c.fail("inverse of the value colon image differs: " + print_term(small) + " came back as " +
           print_term(inv_computation(colon(small, k_leaf(), dir), dir)));
}

void do_substitution(CheckContext& c) {
    Direction dir = c.dir;
    int d = c.cfg.max_depth - 2;
    VarName x = c.rng.pick(c.cfg.var_pool);
    // The replacement: a CPS-value for v2n, a base suspension for n2v, with
    // its source-side image.
    TermPtr repl_img;
    TermPtr repl;
    if (dir == Direction::V2N) {
        repl = gen_cps_value(c.cfg, c.rng, dir, d);
        repl_img = inv_value(repl, dir);
    } else {
        repl = gen_base_suspension(c.cfg, c.rng, dir, d);
        repl_img = inv_suspension(repl, dir);
    }

    auto check_clause = [&](const char* clause, const TermPtr& lhs, const TermPtr& rhs,
                            const TermPtr& input) {
        if (alpha_eq(lhs, rhs)) return;
        c.fail(std::string("substitution clause ") + clause + " on " + print_term(input) +
               " with " + x.name + " := " + print_term(repl) + ": " + print_term(lhs) +
               " != " + print_term(rhs));
    };

    TermPtr b1 = gen_cps_value(c.cfg, c.rng, dir, d);
    check_clause("value", substitute(inv_value(b1, dir), x, repl_img),
                 inv_value(substitute(b1, x, repl), dir), b1);

    TermPtr t = gen_suspension(c.cfg, c.rng, dir, d);
    check_clause("suspension", substitute(inv_suspension(t, dir), x, repl_img),
                 inv_suspension(substitute(t, x, repl), dir), t);

    TermPtr cc = gen_base_computation(c.cfg, c.rng, dir, d);
    check_clause("computation", substitute(inv_computation(cc, dir), x, repl_img),
                 inv_computation(substitute(cc, x, repl), dir), cc);

    TermPtr k = gen_continuation(c.cfg, c.rng, dir, d);
    TermPtr m = gen_source(c, d);
    TermPtr lhs = substitute(apply_continuation(k, m, dir), x, repl_img);
    TermPtr rhs = apply_continuation(substitute(k, x, repl), substitute(m, x, repl_img), dir);
    if (!alpha_eq(lhs, rhs))
        c.fail("substitution clause continuation on " + print_term(k) + " filled with " +
               print_term(m) + ": " + print_term(lhs) + " != " + print_term(rhs));
}

void do_continuation_composition(CheckContext& c) {
    int d = c.cfg.max_depth - 2;
    TermPtr k1 = gen_continuation(c.cfg, c.rng, c.dir, d);
    TermPtr k2 = gen_continuation(c.cfg, c.rng, c.dir, d);
    TermPtr m = gen_source(c, d);
    TermPtr lhs = apply_continuation(k1, apply_continuation(k2, m, c.dir), c.dir);
    TermPtr rhs = apply_continuation(substitute(k2, cont_k(), k1), m, c.dir);
    if (!alpha_eq(lhs, rhs))
        c.fail("continuation composition differs on K1=" + print_term(k1) + " K2=" +
               print_term(k2) + " M=" + print_term(m) + ": " + print_term(lhs) + " != " +
               print_term(rhs));
}

void do_continuation_substitution(CheckContext& c) {
    int d = c.cfg.max_depth - 2;
    TermPtr k = gen_continuation(c.cfg, c.rng, c.dir, d);
    TermPtr cc = gen_base_computation(c.cfg, c.rng, c.dir, d);
    TermPtr lhs = apply_continuation(k, inv_computation(cc, c.dir), c.dir);
    TermPtr rhs = inv_computation(substitute(cc, cont_k(), k), c.dir);
    if (!alpha_eq(lhs, rhs))
        c.fail("continuation substitution differs on K=" + print_term(k) + " C=" +
               print_term(cc) + ": " + print_term(lhs) + " != " + print_term(rhs));
}

void do_continuation_step(CheckContext& c) {
    Relation rel = source_rel(c.dir);
    TermPtr m;
    std::vector<Step> steps;
    for (int tries = 0; tries < 24 && steps.empty(); tries++) {
        m = gen_source(c, c.cfg.max_depth);
        steps = enumerate_steps(m, rel);
    }
    if (steps.empty()) return;  // vacuous instance
    TermPtr k = gen_continuation(c.cfg, c.rng, c.dir, c.cfg.max_depth - 2);
    TermPtr km = apply_continuation(k, m, c.dir);
    auto around = enumerate_steps(km, rel);
    size_t samples = std::min<size_t>(steps.size(), 3);
    for (size_t i = 0; i < samples; i++) {
        const Step& s = steps[c.rng.below(steps.size())];
        c.cov.note(s);
        TermPtr want = apply_continuation(k, s.target, c.dir);
        bool hit = false;
        for (const auto& t : around) {
            if (alpha_eq(t.target, want)) {
                c.cov.note(t);
                hit = true;
                break;
            }
        }
        if (!hit)
            c.fail("step " + std::string(rule_name(s.rule)) + " on " + print_term(m) +
                   " is not mirrored inside K=" + print_term(k) + ": expected one-step " +
                   print_term(km) + " -> " + print_term(want));
    }
}

void do_continuation_linearity(CheckContext& c) {
    Relation rel = source_rel(c.dir);
    Direction dir = c.dir;
    int d = c.cfg.max_depth - 2;
    TermPtr k = gen_continuation(c.cfg, c.rng, dir, d);
    TermPtr m1 = gen_source(c, d);
    TermPtr m2 = gen_source(c, d);
    Scalar a = c.rng.pick(c.cfg.scalar_pool);

    enum class Bullet { Sum, Scale, Zero };
    auto instance = [&](Bullet b, const TermPtr& kk, const TermPtr& x1,
                        const TermPtr& x2) -> std::pair<TermPtr, TermPtr> {
        switch (b) {
            case Bullet::Sum:
                return {apply_continuation(kk, sum(x1, x2), dir),
                        sum(apply_continuation(kk, x1, dir), apply_continuation(kk, x2, dir))};
            case Bullet::Scale:
                return {apply_continuation(kk, scale(a, x1), dir),
                        scale(a, apply_continuation(kk, x1, dir))};
            default:
                return {apply_continuation(kk, zero(), dir), zero()};
        }
    };

    auto run_bullet = [&](Bullet b, const char* what) {
        auto [lhs, rhs] = instance(b, k, m1, m2);
        auto out = reachable(lhs, rhs, rel, c.search_opts());
        if (out.found()) {
            c.cov.note_all(out.witness->steps);
            return;
        }
        if (out.status == SearchOutcome::Status::BudgetExhausted) {
            c.report.inconclusive++;
            return;
        }
        TermPtr sk = k, s1 = m1, s2 = m2;
        if (c.shrunk_failures < 8) {
            c.shrunk_failures++;
            auto fails = [&](const TermPtr& kk, const TermPtr& x1, const TermPtr& x2) {
                if (!in_class(kk, GrammarClass::Continuation, dir)) return false;
                auto [l, r] = instance(b, kk, x1, x2);
                return reachable(l, r, rel, c.search_opts()).status ==
                       SearchOutcome::Status::Unreachable;
            };
            int evals = 60;
            bool improved = true;
            while (improved && evals > 0) {
                improved = false;
                std::vector<TermPtr> k_cands;
                all_subterms_into(sk, k_cands);
                for (size_t i = 1; i < k_cands.size() && !improved && evals > 0; i++) {
                    evals--;
                    try {
                        if (fails(k_cands[i], s1, s2)) {
                            sk = k_cands[i];
                            improved = true;
                        }
                    } catch (const std::exception&) {
                    }
                }
                for (TermPtr* slot : {&s1, &s2}) {
                    if (improved || evals <= 0) break;
                    for (const auto& cand : shrink_candidates(*slot)) {
                        if (evals-- <= 0) break;
                        TermPtr t1 = slot == &s1 ? cand : s1;
                        TermPtr t2 = slot == &s2 ? cand : s2;
                        try {
                            if (fails(sk, t1, t2)) {
                                s1 = t1;
                                s2 = t2;
                                improved = true;
                                break;
                            }
                        } catch (const std::exception&) {
                        }
                    }
                }
            }
        }
        auto [sl, sr] = instance(b, sk, s1, s2);
        c.fail(std::string("continuation linearity (") + what + ") with K=" + print_term(sk) +
               ": " + print_term(sl) + "  -/->*  " + print_term(sr) + " [" +
               relation_name(rel) + "]");
    };

    run_bullet(Bullet::Sum, "sum");
    run_bullet(Bullet::Scale, "scale");
    run_bullet(Bullet::Zero, "zero");
}

void do_suspension_step(CheckContext& c) {
    Relation tgt = target_rel(c.dir);
    Relation src = source_rel(c.dir);
    TermPtr t;
    std::vector<Step> steps;
    for (int tries = 0; tries < 24 && steps.empty(); tries++) {
        t = gen_suspension(c.cfg, c.rng, c.dir, c.cfg.max_depth - 1);
        steps = enumerate_steps(t, tgt);
    }
    if (steps.empty()) return;
    TermPtr sig = inv_suspension(t, c.dir);
    auto around = enumerate_steps(sig, src);
    size_t samples = std::min<size_t>(steps.size(), 3);
    for (size_t i = 0; i < samples; i++) {
        const Step& s = steps[c.rng.below(steps.size())];
        c.cov.note(s);
        TermPtr want = inv_suspension(s.target, c.dir);
        bool hit = false;
        for (const auto& u : around) {
            if (alpha_eq(u.target, want)) {
                c.cov.note(u);
                hit = true;
                break;
            }
        }
        if (!hit)
            c.fail("suspension step " + std::string(rule_name(s.rule)) + " on " + print_term(t) +
                   " not mirrored: expected " + print_term(sig) + " -> " + print_term(want));
    }
}

void do_inverse_step(CheckContext& c) {
    Direction dir = c.dir;
    Relation tgt = target_rel(dir);
    Relation src = source_rel(dir);
    TermPtr d = gen_computation_by_walk(c, dir, static_cast<int>(c.rng.below(4)));
    if (!in_class(d, GrammarClass::Computation, dir)) {
        c.fail("translated image left the computation grammar: " + print_term(d));
        return;
    }
    auto succ = enumerate_steps(d, tgt);
    size_t samples = std::min<size_t>(succ.size(), 4);
    for (size_t i = 0; i < samples; i++) {
        const Step& s = succ[c.rng.below(succ.size())];
        c.cov.note(s);
        TermPtr from = inv_computation(d, dir);
        TermPtr to = inv_computation(s.target, dir);
        auto out = reachable(from, to, src, c.search_opts());
        if (out.found()) {
            c.cov.note_all(out.witness->steps);
            continue;
        }
        if (out.status == SearchOutcome::Status::BudgetExhausted) {
            c.report.inconclusive++;
            continue;
        }
        // Definitive counterexample; shrink the computation while it still
        // has some successor whose inverse is unreachable.
        auto fails = [dir, tgt, src, &c](const TermPtr& cand) {
            if (!in_class(cand, GrammarClass::Computation, dir)) return false;
            TermPtr f = inv_computation(cand, dir);
            for (const auto& t : enumerate_steps(cand, tgt)) {
                auto r = reachable(f, inv_computation(t.target, dir), src, c.search_opts());
                if (r.status == SearchOutcome::Status::Unreachable) return true;
            }
            return false;
        };
        TermPtr small = d;
        if (c.shrunk_failures < 6) {
            c.shrunk_failures++;
            small = shrink_term(d, fails, 60);
        }
        c.fail("inverse translation loses the step " + std::string(rule_name(s.rule)) + " @ " +
               path_str(s.position) + " of D=" + print_term(small) + ": " + print_term(from) +
               "  -/->*  " + print_term(to) + " [" + relation_name(src) + "]");
    }
}

void do_grammar_closure(CheckContext& c) {
    Direction dir = c.dir;
    Relation tgt = target_rel(dir);
    TermPtr d = gen_computation_by_walk(c, dir, static_cast<int>(c.rng.below(3)));
    if (!in_class(d, GrammarClass::Computation, dir)) {
        c.fail("translated image not a computation: " + print_term(d));
        return;
    }
    for (const auto& s : enumerate_steps(d, tgt)) {
        c.cov.note(s);
        if (!in_class(s.target, GrammarClass::Computation, dir))
            c.fail("computation class not closed under " + std::string(rule_name(s.rule)) +
                   ": " + print_term(d) + " -> " + print_term(s.target) + " which classifies as " +
                   grammar_class_name(classify(s.target, dir)));
    }
    TermPtr t = gen_suspension(c.cfg, c.rng, dir, c.cfg.max_depth - 1);
    for (const auto& s : enumerate_steps(t, tgt)) {
        c.cov.note(s);
        if (!in_class(s.target, GrammarClass::Suspension, dir))
            c.fail("suspension class not closed under " + std::string(rule_name(s.rule)) + ": " +
                   print_term(t) + " -> " + print_term(s.target));
    }
    // Continuations and CPS-values are normal forms: no reduction happens
    // under a binder and their leaves are variables.
    TermPtr k = gen_continuation(c.cfg, c.rng, dir, c.cfg.max_depth - 2);
    if (!enumerate_steps(k, tgt).empty())
        c.fail("continuation unexpectedly reduces: " + print_term(k));
    TermPtr b = gen_cps_value(c.cfg, c.rng, dir, c.cfg.max_depth - 2);
    if (!enumerate_steps(b, tgt).empty())
        c.fail("CPS-value unexpectedly reduces: " + print_term(b));
}

void do_indifference(CheckContext& c) {
    Direction dir = c.dir;
    TermPtr d = gen_computation_by_walk(c, dir, static_cast<int>(c.rng.below(4)));
    if (!in_class(d, GrammarClass::Computation, dir)) {
        c.fail("translated image not a computation: " + print_term(d));
        return;
    }
    auto lin_steps = enumerate_steps(d, Relation::Lin);
    auto alg_steps = enumerate_steps(d, Relation::Alg);
    c.cov.note_all(lin_steps);
    c.cov.note_all(alg_steps);
    std::set<std::string> lin_keys, alg_keys;
    for (const auto& s : lin_steps) lin_keys.insert(nameless_key(s.target));
    for (const auto& s : alg_steps) alg_keys.insert(nameless_key(s.target));
    if (lin_keys != alg_keys) {
        std::ostringstream os;
        os << "computation reduces differently in the two calculi: " << print_term(d)
           << " (lin " << lin_keys.size() << " targets, alg " << alg_keys.size() << ")";
        c.fail(os.str());
    }
}

void do_free_vars(CheckContext& c) {
    TermPtr m = gen_source(c, c.cfg.max_depth);
    auto fv_m = free_vars(m);
    TermPtr img = cps(m, c.dir);
    if (free_vars(img) != fv_m) {
        c.fail("translation changed the free variables of " + print_term(m) + ": image " +
               print_term(img));
        return;
    }
    auto fv_applied = free_vars(app(img, k_leaf()));
    auto expected = fv_m;
    expected.insert(cont_k());
    if (fv_applied != expected)
        c.fail("applying the image to k does not add exactly {k} for " + print_term(m));
}

void do_initial_collapse(CheckContext& c) {
    TermPtr m = gen_source(c, c.cfg.max_depth);
    if (auto witness = collapse_witness(m, c.dir)) {
        c.cov.note_all(*witness);
        return;
    }
    c.expect_reachable(app(cps(m, c.dir), k_leaf()), colon(m, k_leaf(), c.dir),
                       target_rel(c.dir),
                       "administrative collapse of the translation of " + print_term(m));
}

void do_non_injectivity(CheckContext& c) {
    // Fixed witness: (x+y) z and x z + y z share one colon image.
    if (c.instance == 0 && c.dir == Direction::V2N) {
        TermPtr m0 = parse_term("(x+y) z");
        TermPtr back = inv_computation(colon(m0, k_leaf(), Direction::V2N), Direction::V2N);
        if (alpha_eq(back, m0))
            c.fail("expected the colon image of (x+y) z to decompile differently");
        if (!alpha_eq(back, parse_term("x z + y z")))
            c.fail("colon image of (x+y) z decompiled to " + print_term(back) +
                   ", expected x z + y z");
    }
    if (c.dir != Direction::V2N) return;
    // (a.M) L and a.(M L) have literally the same colon translation.
    int d = c.cfg.max_depth - 2;
    TermPtr m = gen_source(c, d);
    TermPtr l = gen_source(c, d);
    Scalar a = c.rng.pick(c.cfg.scalar_pool);
    TermPtr lhs = colon(app(scale(a, m), l), k_leaf(), Direction::V2N);
    TermPtr rhs = colon(scale(a, app(m, l)), k_leaf(), Direction::V2N);
    if (nameless_key(lhs) != nameless_key(rhs))
        c.fail("colon images of (a.M)L and a.(ML) differ for M=" + print_term(m) +
               " L=" + print_term(l));
}

// --------------------------------------------------------------------------

using NamedCheck = std::pair<const char*, void (*)(CheckContext&)>;

constexpr NamedCheck kChecks[] = {
    {"inverse-term", do_inverse_term},
    {"inverse-value", do_inverse_value},
    {"substitution", do_substitution},
    {"continuation-composition", do_continuation_composition},
    {"continuation-substitution", do_continuation_substitution},
    {"continuation-step", do_continuation_step},
    {"continuation-linearity", do_continuation_linearity},
    {"suspension-step", do_suspension_step},
    {"inverse-step", do_inverse_step},
    {"grammar-closure", do_grammar_closure},
    {"indifference", do_indifference},
    {"free-vars", do_free_vars},
    {"initial-collapse", do_initial_collapse},
    {"non-injectivity", do_non_injectivity},
};

}  // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : kChecks) {
            (void)fn;
            v.push_back(name);
        }
        v.push_back("soundness");
        v.push_back("completeness");
        return v;
    }();
    return ids;
}

bool is_lemma_id(const std::string& id) {
    const auto& ids = lemma_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckReport check_lemma(const std::string& id, const GenConfig& cfg, int instances,
                        const Budgets& budgets, Coverage& cov) {
    if (id == "soundness") return check_soundness(cfg, instances, budgets, cov);
    if (id == "completeness") return check_completeness(cfg, instances, budgets, cov);
    for (const auto& [name, fn] : kChecks)
        if (id == name) return run_directional(name, cfg, budgets, cov, instances, fn);
    throw PreconditionError("unknown lemma id: " + id);
}

// --------------------------------------------------------------------------
// Soundness / completeness over normalizing source terms.

namespace {

// Generates terms until one normalizes to a value in the source calculus.
struct NormalizingTerm {
    TermPtr term;
    TermPtr value;
    Trace trace;
};

std::optional<NormalizingTerm> gen_normalizing(CheckContext& c, Direction dir) {
    for (int tries = 0; tries < 40; tries++) {
        TermPtr m = gen_term_depth(c.cfg, c.rng, std::min(c.cfg.max_depth, 4), false);
        auto nr = normalize(m, source_rel(dir), 200, true);
        if (nr.status != NormalizeOutcome::Status::Value) continue;
        c.cov.note_all(nr.trace.steps);
        return {{m, nr.term, std::move(nr.trace)}};
    }
    return std::nullopt;
}

// Decodes X as the colon image V:k of a value, if it has that shape.
std::optional<TermPtr> decode_value_colon(const TermPtr& x, Direction dir) {
    switch (x->kind()) {
        case TermKind::Zero:
            return zero();
        case TermKind::Scale: {
            const auto& s = x->as<ScaleNode>();
            auto inner = decode_value_colon(s.body, dir);
            if (!inner) return std::nullopt;
            return scale(s.coeff, *inner);
        }
        case TermKind::Sum: {
            const auto& s = x->as<SumNode>();
            auto l = decode_value_colon(s.lhs, dir);
            auto r = decode_value_colon(s.rhs, dir);
            if (!l || !r) return std::nullopt;
            return sum(*l, *r);
        }
        case TermKind::App: {
            const auto& a = x->as<AppNode>();
            const auto* fv = a.fun->get_if<VarNode>();
            if (fv && fv->name == cont_k() && in_class(a.arg, GrammarClass::CpsValue, dir))
                return inv_value(a.arg, dir);
            if (dir == Direction::N2V) {
                const auto* av = a.arg->get_if<VarNode>();
                if (fv && fv->name.space == Space::Source && av && av->name == cont_k())
                    return a.fun;  // x:k = x k
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

struct Exploration {
    std::vector<TermPtr> states;
    bool truncated = false;
};

Exploration explore(const TermPtr& start, Relation rel, size_t max_states, Coverage& cov) {
    Exploration out;
    std::set<std::string> seen;
    out.states.push_back(start);
    seen.insert(nameless_key(start));
    for (size_t qi = 0; qi < out.states.size(); qi++) {
        for (const auto& s : enumerate_steps(out.states[qi], rel)) {
            std::string k = nameless_key(s.target);
            if (seen.count(k)) continue;
            if (out.states.size() >= max_states) {
                out.truncated = true;
                return out;
            }
            cov.note(s);
            seen.insert(std::move(k));
            out.states.push_back(s.target);
        }
    }
    return out;
}

}  // namespace

CheckReport check_soundness(const GenConfig& cfg, int instances, const Budgets& budgets,
                            Coverage& cov) {
    CheckContext c("soundness", cfg, budgets, cov);
    int per_dir = (instances + 1) / 2;
    for (Direction dir : {Direction::V2N, Direction::N2V}) {
        c.dir = dir;
        for (int i = 0; i < per_dir; i++) {
            c.instance = i;
            auto gen = gen_normalizing(c, dir);
            if (!gen) continue;
            c.report.attempted++;
            TermPtr goal = colon(gen->value, k_leaf(), dir);
            if (auto witness = simulate_trace(gen->term, gen->trace, goal, dir)) {
                cov.note_all(*witness);
                continue;
            }
            c.expect_reachable(app(cps(gen->term, dir), k_leaf()), goal, target_rel(dir),
                               "soundness: source " + print_term(gen->term) +
                                   " normalizes to " + print_term(gen->value) +
                                   " but the translation misses its colon image");
        }
    }
    return c.report;
}

CheckReport check_completeness(const GenConfig& cfg, int instances, const Budgets& budgets,
                               Coverage& cov) {
    CheckContext c("completeness", cfg, budgets, cov);
    int per_dir = (instances + 1) / 2;
    for (Direction dir : {Direction::V2N, Direction::N2V}) {
        c.dir = dir;
        for (int i = 0; i < per_dir; i++) {
            c.instance = i;
            auto gen = gen_normalizing(c, dir);
            if (!gen) continue;
            c.report.attempted++;
            TermPtr m = gen->term;
            TermPtr d0 = app(cps(m, dir), k_leaf());
            auto ex = explore(d0, target_rel(dir), budgets.search_states, cov);
            bool instance_inconclusive = ex.truncated;
            std::set<std::string> seen_values;
            for (const auto& x : ex.states) {
                auto v = decode_value_colon(x, dir);
                if (!v || !is_value(*v)) continue;
                if (!seen_values.insert(linear_key(*v)).second) continue;
                // The normalizer's own value needs no search: its trace is
                // already a source-side witness.
                if (alpha_eq_modulo_linear(*v, gen->value)) continue;
                auto out = reachable(m, *v, source_rel(dir), c.search_opts());
                if (out.found()) {
                    cov.note_all(out.witness->steps);
                } else if (out.status == SearchOutcome::Status::BudgetExhausted) {
                    instance_inconclusive = true;
                } else {
                    c.fail("completeness: translation of " + print_term(m) + " reaches " +
                           print_term(x) + " = colon image of value " + print_term(*v) +
                           ", but the source cannot reach that value");
                }
            }
            if (instance_inconclusive) c.report.inconclusive++;
        }
    }
    return c.report;
}

std::string report_line(const CheckReport& r) {
    std::ostringstream os;
    os << "check " << r.name << ": " << r.attempted << " instances, " << r.failures.size()
       << " failures, " << r.inconclusive << " inconclusive ["
       << (r.passed() ? "PASS" : "FAIL") << "]";
    if (!r.note.empty()) os << " " << r.note;
    return os.str();
}

}  // namespace alc
