#pragma once

#include "alc/term.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace alc {

// One label per rule line of the two calculi: the beta rules, the three
// application-linearity groups, the vector-space group L, and the context
// lines. Context labels never appear on a Step (a step carries its base
// rule plus the redex path); they exist for coverage accounting.
enum class RuleLabel : unsigned char {
    BetaN, BetaV,
    A_app_sum, A_app_scale, A_app_zero,
    Al_sum, Al_scale, Al_zero,
    Ar_sum, Ar_scale, Ar_zero,
    Asso_L, Asso_R, Com,
    F1, F2, F3, F4,
    S1, S2, S3, S4, S5,
    Xi_appL, Xi_sumL, Xi_sumR, Xi_scale, XiLin_appR,
};

constexpr size_t kRuleLineCount = 28;

const char* rule_name(RuleLabel r);
bool is_linear_rule(RuleLabel r);  // Asso/Com/F/S

enum class Relation { Lin, Alg };
const char* relation_name(Relation r);

// Child indices: application (function=0, argument=1), sum (left=0,
// right=1), scale (body=0). Paths never descend under a binder.
using Path = std::vector<int>;

std::string path_str(const Path& p);

struct Step {
    TermPtr source;
    TermPtr target;
    RuleLabel rule;
    Path position;
};

struct Trace {
    TermPtr initial;
    std::vector<Step> steps;

    TermPtr final_term() const { return steps.empty() ? initial : steps.back().target; }
};

std::string trace_to_text(const Trace& t);

TermPtr subterm_at(const TermPtr& m, const Path& p);
TermPtr replace_at(const TermPtr& m, const Path& p, const TermPtr& sub);

// The complete one-step successor set of m under the chosen relation, each
// with the base rule and redex path. Both relations share the vector-space
// rules and the plain context rules; Lin additionally reduces application
// arguments under a value function, Alg never reduces arguments.
std::vector<Step> enumerate_steps(const TermPtr& m, Relation rel);

// Replays one rule at one position; nullopt if the rule does not match
// there or the position is not legal for the relation.
std::optional<TermPtr> apply_rule_at(const TermPtr& m, RuleLabel rule, const Path& p,
                                     Relation rel);

// Realizes canonicalize_linear(m) as an explicit chain of one-step linear
// rewrites at context-legal positions (valid in both relations).
std::pair<TermPtr, std::vector<Step>> canonical_steps(const TermPtr& m);

struct SearchOptions {
    size_t max_states = 100000;
    bool modulo_linear = true;      // match states/goal modulo canonicalize_linear
    bool linear_rules_only = false; // restrict the relation to the L group
};

struct SearchOutcome {
    enum class Status { Found, Unreachable, BudgetExhausted };
    Status status;
    std::optional<Trace> witness;
    size_t states = 0;

    bool found() const { return status == Status::Found; }
};

// Breadth-first search of the reduction graph. Visited states deduplicate
// up to alpha-equivalence (coarser keys lose real paths, since states with
// one linear canonical form can carry different redexes); the goal matches
// modulo the linear rules by default. Unreachable means the whole (finite)
// closure was enumerated; BudgetExhausted is an unknown.
SearchOutcome reachable(const TermPtr& start, const TermPtr& goal, Relation rel,
                        SearchOptions opt = {});

struct NormalizeOutcome {
    enum class Status { Value, Stuck, Timeout };
    Status status;
    TermPtr term;
    Trace trace;
    size_t rule_steps = 0;

    bool is_value_result() const { return status == Status::Value; }
};

// Deterministic strategy: canonicalize the linear structure, then fire the
// leftmost-outermost enabled non-linear rule; repeat until the term is a
// value (returned canonical), no rule applies (Stuck), or max_steps
// non-linear steps were taken (Timeout). The trace records every step,
// including the canonicalization micro-steps, so it replays faithfully.
NormalizeOutcome normalize(const TermPtr& m, Relation rel, size_t max_steps = 1000,
                           bool record_trace = true);

}  // namespace alc
