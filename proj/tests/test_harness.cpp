#include "alc/harness.hpp"

#include "alc/syntax.hpp"

#include <doctest.h>

using namespace alc;

TEST_CASE("generator basics") {
    GenConfig cfg = GenConfig::defaults();
    Rng a(5), b(5);
    for (int i = 0; i < 100; i++)
        CHECK(nameless_key(gen_term(cfg, a)) == nameless_key(gen_term(cfg, b)));
    cfg.value_only = true;
    Rng c(6);
    for (int i = 0; i < 200; i++) CHECK(is_value(gen_term(cfg, c)));
    Rng d(7);
    CHECK(is_base_value(gen_term_depth(cfg, d, 0, true)));
}

TEST_CASE("reports are deterministic in the seed") {
    GenConfig cfg = GenConfig::defaults();
    cfg.seed = 99;
    Budgets budgets;
    Coverage cov1, cov2;
    CheckReport r1 = check_lemma("inverse-term", cfg, 60, budgets, cov1);
    CheckReport r2 = check_lemma("inverse-term", cfg, 60, budgets, cov2);
    CHECK(r1.attempted == r2.attempted);
    CHECK(r1.failures.size() == r2.failures.size());
    CHECK(cov1.counts == cov2.counts);
}

TEST_CASE("equation lemmas hold on a quick run") {
    GenConfig cfg = GenConfig::defaults();
    Budgets budgets;
    Coverage cov;
    for (const char* id : {"inverse-term", "inverse-value", "substitution",
                           "continuation-composition", "continuation-substitution",
                           "continuation-step", "suspension-step", "free-vars",
                           "grammar-closure", "indifference", "non-injectivity"}) {
        CheckReport r = check_lemma(id, cfg, 60, budgets, cov);
        INFO(report_line(r));
        for (const auto& f : r.failures) { INFO(f.detail); }
        CHECK(r.passed());
    }
}

TEST_CASE("initial collapse holds on a quick run") {
    GenConfig cfg = GenConfig::defaults();
    cfg.max_depth = 4;
    Budgets budgets;
    Coverage cov;
    CheckReport r = check_lemma("initial-collapse", cfg, 40, budgets, cov);
    CHECK(r.passed());
    CHECK(r.inconclusive == 0);
}

TEST_CASE("soundness and completeness on a quick run") {
    GenConfig cfg = GenConfig::defaults();
    cfg.max_depth = 4;
    Budgets budgets;
    Coverage cov;
    CheckReport s = check_soundness(cfg, 30, budgets, cov);
    INFO(report_line(s));
    CHECK(s.passed());
    CheckReport c = check_completeness(cfg, 30, budgets, cov);
    INFO(report_line(c));
    CHECK(c.passed());
}

TEST_CASE("unknown lemma ids are rejected") {
    GenConfig cfg = GenConfig::defaults();
    Budgets budgets;
    Coverage cov;
    CHECK_THROWS_AS(check_lemma("no-such-lemma", cfg, 5, budgets, cov), PreconditionError);
    CHECK(is_lemma_id("inverse-step"));
    CHECK(!is_lemma_id("inverse_step"));
}

TEST_CASE("coverage accounting sees context lines") {
    Coverage cov;
    TermPtr m = parse_term("y + 1.x");
    auto steps = enumerate_steps(m, Relation::Alg);
    cov.note_all(steps);
    CHECK(cov.counts[static_cast<size_t>(RuleLabel::S2)] > 0);
    CHECK(cov.counts[static_cast<size_t>(RuleLabel::Xi_sumR)] > 0);
}

// The next two cases pin down the boundary behaviors behind the failing
// property checks, so a change in their outcome is flagged immediately.

TEST_CASE("boundary: application over a sum does not distribute when the argument is no value") {
    // (y + z) (w v) only commutes in the call-by-value calculus; the
    // distributed form needs a value argument and w v never becomes one.
    auto out = reachable(parse_term("(y + z) (w v)"), parse_term("y (w v) + z (w v)"),
                         Relation::Lin, {1000, true, false});
    CHECK(out.status == SearchOutcome::Status::Unreachable);
    // The stuck shape is the decompilation of a classified continuation
    // filled with a sum, which is why the continuation-linearity and
    // inverse-step checks report v2n counterexamples.
    TermPtr k0 = parse_term("\\b1.(\\k.(\\k.k w) \\b1.(\\k.k v) \\b2.b1 b2 k) \\b2.b1 b2 k");
    REQUIRE(classify(k0, Direction::V2N) == GrammarClass::Continuation);
    CHECK(alpha_eq(apply_continuation(k0, parse_term("y + z"), Direction::V2N),
                   parse_term("(y + z) (w v)")));
}

TEST_CASE("boundary: a call-by-name beta on the zero term has no call-by-value mirror") {
    // (\z.y) 0 reduces to y by substituting 0, but the translated argument
    // is the zero term, which is not a base value, so the image is stuck
    // before reaching the colon image of y.
    TermPtr m = parse_term("(\\z.y) 0");
    auto nr = normalize(m, Relation::Alg, 50, false);
    REQUIRE(nr.status == NormalizeOutcome::Status::Value);
    CHECK(alpha_eq(nr.term, parse_term("y")));
    auto out = reachable(app(cps(m, Direction::N2V), var(cont_k())),
                         colon(nr.term, var(cont_k()), Direction::N2V), Relation::Lin,
                         {5000, true, false});
    CHECK(out.status == SearchOutcome::Status::Unreachable);
    // The two relations also disagree on the stuck application itself,
    // which bounds the indifference property to zero-free computations.
    TermPtr d = app(app(phi(parse_term("\\z.y w")), zero()), var(cont_k()));
    REQUIRE(classify(d, Direction::N2V) == GrammarClass::BaseComputation);
    auto lin = enumerate_steps(d, Relation::Lin);
    auto alg = enumerate_steps(d, Relation::Alg);
    REQUIRE(lin.size() == 1);
    REQUIRE(alg.size() == 1);
    CHECK(lin[0].rule == RuleLabel::Ar_zero);
    CHECK(alg[0].rule == RuleLabel::BetaN);
    CHECK(!alpha_eq(lin[0].target, alg[0].target));
}
