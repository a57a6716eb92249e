#include "alc/inverse.hpp"

#include "alc/harness.hpp"
#include "alc/syntax.hpp"

#include <doctest.h>

using namespace alc;

namespace {

TermPtr P(const std::string& s) { return parse_term(s); }
TermPtr K() { return var(cont_k()); }

}  // namespace

TEST_CASE("classification of the grammar categories") {
    CHECK(classify(P("\\k.k x"), Direction::V2N) == GrammarClass::BaseSuspension);
    CHECK(classify(P("x"), Direction::N2V) == GrammarClass::BaseSuspension);
    CHECK(classify(P("x"), Direction::V2N) == GrammarClass::CpsValue);
    CHECK(classify(P("k x + k y"), Direction::V2N) == GrammarClass::Computation);
    CHECK(classify(P("k x"), Direction::V2N) == GrammarClass::BaseComputation);
    CHECK(classify(P("k"), Direction::V2N) == GrammarClass::Continuation);
    CHECK(classify(P("\\b.x b k"), Direction::V2N) == GrammarClass::Continuation);
    CHECK(classify(P("\\b.b x k"), Direction::N2V) == GrammarClass::Continuation);
    CHECK(classify(P("\\b1.(\\k.k x) (\\b2.b1 b2 k)"), Direction::V2N) ==
          GrammarClass::Continuation);
    CHECK(classify(P("x y z"), Direction::V2N) == GrammarClass::None);
    CHECK(classify(P("x k"), Direction::N2V) == GrammarClass::BaseComputation);
    CHECK(classify(P("x k"), Direction::V2N) == GrammarClass::None);
    CHECK(classify(P("x y k"), Direction::V2N) == GrammarClass::BaseComputation);
    // reserved-name discipline: a stray intermediate variable disqualifies
    CHECK(classify(P("k b"), Direction::V2N) == GrammarClass::None);
    CHECK(classify(P("\\b.x b1 k"), Direction::V2N) == GrammarClass::None);
    // pure-zero combinations sit in both combination classes
    CHECK(classify(P("0"), Direction::V2N) == GrammarClass::Computation);
    CHECK(in_class(P("0"), GrammarClass::Suspension, Direction::V2N));
    CHECK(in_class(P("2.0"), GrammarClass::Computation, Direction::N2V));
}

TEST_CASE("inverse functions on the displayed cases") {
    CHECK(alpha_eq(inv_computation(P("k x"), Direction::V2N), P("x")));
    CHECK(alpha_eq(inv_suspension(P("0"), Direction::V2N), P("0")));
    CHECK(alpha_eq(inv_suspension(P("x"), Direction::N2V), P("x")));
    CHECK(alpha_eq(inv_value(P("x"), Direction::V2N), P("x")));
    CHECK(alpha_eq(inv_value(P("\\x.\\k.k x"), Direction::V2N), P("\\x.x")));
    CHECK(alpha_eq(inv_value(P("\\x.x"), Direction::N2V), P("\\x.x")));
    CHECK(alpha_eq(apply_continuation(K(), P("m"), Direction::V2N), P("m")));
    CHECK(alpha_eq(apply_continuation(P("\\b.x b k"), P("m n"), Direction::V2N), P("x (m n)")));
    CHECK(alpha_eq(apply_continuation(P("\\b.b x k"), P("m n"), Direction::N2V), P("m n x")));
    CHECK(alpha_eq(apply_continuation(P("\\b1.(\\k.k w) (\\b2.b1 b2 k)"), P("m"),
                                      Direction::V2N),
                   P("m w")));
}

TEST_CASE("ill-formed inputs are rejected with the failing subterm") {
    CHECK_THROWS_AS(inv_computation(P("x y"), Direction::V2N), PreconditionError);
    CHECK_THROWS_AS(inv_suspension(P("x"), Direction::V2N), PreconditionError);
    CHECK_THROWS_AS(inv_value(P("x"), Direction::N2V), PreconditionError);
    CHECK_THROWS_AS(apply_continuation(P("x"), P("m"), Direction::V2N), PreconditionError);
    CHECK_THROWS_AS(apply_continuation(P("\\b.x b1 k"), P("m"), Direction::V2N),
                    PreconditionError);
    try {
        inv_computation(P("k (x y)"), Direction::V2N);
        CHECK(false);
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("x y") != std::string::npos);
    }
}

TEST_CASE("round trips on random terms") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(51);
    for (int i = 0; i < 250; i++) {
        TermPtr m = gen_term(cfg, rng);
        for (Direction dir : {Direction::V2N, Direction::N2V}) {
            CHECK(alpha_eq(inv_computation(app(cps(m, dir), K()), dir), m));
            CHECK(alpha_eq(inv_suspension(cps(m, dir), dir), m));
        }
    }
    cfg.value_only = true;
    for (int i = 0; i < 250; i++) {
        TermPtr v = gen_term(cfg, rng);
        for (Direction dir : {Direction::V2N, Direction::N2V})
            CHECK(alpha_eq(inv_computation(colon(v, K(), dir), dir), v));
    }
}

TEST_CASE("non-injectivity witness") {
    TermPtr m0 = P("(x + y) z");
    TermPtr back = inv_computation(colon(m0, K(), Direction::V2N), Direction::V2N);
    CHECK(!alpha_eq(back, m0));
    CHECK(alpha_eq(back, P("x z + y z")));
}

TEST_CASE("generated grammar terms classify correctly") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(52);
    for (Direction dir : {Direction::V2N, Direction::N2V}) {
        for (int i = 0; i < 150; i++) {
            CHECK(in_class(gen_cps_value(cfg, rng, dir, 3), GrammarClass::CpsValue, dir));
            CHECK(in_class(gen_base_suspension(cfg, rng, dir, 3), GrammarClass::BaseSuspension,
                           dir));
            CHECK(in_class(gen_suspension(cfg, rng, dir, 3), GrammarClass::Suspension, dir));
            CHECK(in_class(gen_continuation(cfg, rng, dir, 3), GrammarClass::Continuation, dir));
            CHECK(in_class(gen_base_computation(cfg, rng, dir, 3), GrammarClass::BaseComputation,
                           dir));
        }
    }
}
