#include "alc/cps.hpp"

#include "alc/harness.hpp"
#include "alc/rewrite.hpp"
#include "alc/syntax.hpp"

#include <doctest.h>

using namespace alc;

namespace {

TermPtr P(const std::string& s) { return parse_term(s); }
TermPtr K() { return var(cont_k()); }

}  // namespace

TEST_CASE("translation equations, value-to-name direction") {
    CHECK(alpha_eq(cps(P("x"), Direction::V2N), P("\\k.k x")));
    CHECK(alpha_eq(cps(P("\\x.x"), Direction::V2N), P("\\k.k (\\x.\\k.k x)")));
    CHECK(alpha_eq(cps(P("0"), Direction::V2N), P("0")));
    CHECK(alpha_eq(cps(P("2.x"), Direction::V2N), P("\\k.(2.(\\k.k x)) k")));
    CHECK(alpha_eq(cps(P("x + y"), Direction::V2N), P("\\k.((\\k.k x) + (\\k.k y)) k")));
    CHECK(alpha_eq(cps(P("x y"), Direction::V2N),
                   P("\\k.(\\k.k x) (\\b1.(\\k.k y) (\\b2.b1 b2 k))")));
}

TEST_CASE("translation equations, name-to-value direction") {
    CHECK(alpha_eq(cps(P("x"), Direction::N2V), P("x")));
    CHECK(alpha_eq(cps(P("\\x.x"), Direction::N2V), P("\\k.k (\\x.x)")));
    CHECK(alpha_eq(cps(P("x y"), Direction::N2V), P("\\k.x (\\b.b y k)")));
    CHECK(alpha_eq(cps(P("2.x"), Direction::N2V), P("\\k.(2.x) k")));
}

TEST_CASE("value translations") {
    CHECK(alpha_eq(psi(P("x")), P("x")));
    CHECK(alpha_eq(psi(P("\\x.x")), P("\\x.\\k.k x")));
    CHECK(alpha_eq(phi(P("\\x.x")), P("\\x.x")));
    CHECK_THROWS_AS(psi(P("x + y")), PreconditionError);
    CHECK_THROWS_AS(phi(P("x")), PreconditionError);
}

TEST_CASE("colon translation") {
    CHECK(alpha_eq(colon(P("x"), K(), Direction::V2N), P("k x")));
    CHECK(alpha_eq(colon(P("y + z"), K(), Direction::V2N), P("k y + k z")));
    CHECK(alpha_eq(colon(P("x"), K(), Direction::N2V), P("x k")));
    CHECK(alpha_eq(colon(P("0"), K(), Direction::V2N), P("0")));
    // application cases
    CHECK(alpha_eq(colon(P("x y"), K(), Direction::V2N), P("(\\b.x b k) y")));
    CHECK(alpha_eq(colon(P("x y"), K(), Direction::N2V), P("x (\\b.b y k)")));
    CHECK(alpha_eq(colon(P("(\\x.x) y"), K(), Direction::N2V), P("(\\x.x) y k")));
}

TEST_CASE("reserved variables are rejected at the boundary") {
    CHECK_THROWS_AS(cps(var(cont_k()), Direction::V2N), PreconditionError);
    CHECK_THROWS_AS(cps(lam(interm_var("b"), var("x")), Direction::N2V), PreconditionError);
    CHECK_THROWS_AS(colon(P("x"), P("x"), Direction::V2N), PreconditionError);
    CHECK_THROWS_AS(colon(var(cont_k()), K(), Direction::V2N), PreconditionError);
}

TEST_CASE("free variables are preserved") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(41);
    for (int i = 0; i < 200; i++) {
        TermPtr m = gen_term(cfg, rng);
        for (Direction dir : {Direction::V2N, Direction::N2V}) {
            CHECK(free_vars(cps(m, dir)) == free_vars(m));
            auto allowed = free_vars(m);
            allowed.insert(cont_k());
            auto fv_colon = free_vars(colon(m, K(), dir));
            CHECK(std::includes(allowed.begin(), allowed.end(), fv_colon.begin(),
                                fv_colon.end()));
        }
    }
}

TEST_CASE("images classify into the expected categories") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(42);
    for (int i = 0; i < 200; i++) {
        TermPtr m = gen_term(cfg, rng);
        for (Direction dir : {Direction::V2N, Direction::N2V}) {
            CHECK(in_class(cps(m, dir), GrammarClass::Suspension, dir));
            CHECK(in_class(colon(m, K(), dir), GrammarClass::Computation, dir));
            CHECK(in_class(app(cps(m, dir), K()), GrammarClass::Computation, dir));
        }
    }
}

TEST_CASE("the colon translation is not injective") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(43);
    for (int i = 0; i < 100; i++) {
        TermPtr m = gen_term_depth(cfg, rng, 3, false);
        TermPtr l = gen_term_depth(cfg, rng, 3, false);
        Scalar a = rng.pick(cfg.scalar_pool);
        TermPtr lhs = colon(app(scale(a, m), l), K(), Direction::V2N);
        TermPtr rhs = colon(scale(a, app(m, l)), K(), Direction::V2N);
        CHECK(nameless_key(lhs) == nameless_key(rhs));
    }
}

TEST_CASE("the translated term initially collapses to the colon image") {
    // one administrative step for a variable
    auto out = reachable(app(cps(P("x"), Direction::V2N), K()),
                         colon(P("x"), K(), Direction::V2N), Relation::Alg,
                         {100, true, false});
    REQUIRE(out.found());
    CHECK(out.witness->steps.size() == 1);
    CHECK(out.witness->steps[0].rule == RuleLabel::BetaN);

    // raw breadth-first search on small terms; the harness check covers the
    // deeper ones through the administrative-collapse probe
    GenConfig cfg = GenConfig::defaults();
    cfg.max_depth = 2;
    Rng rng(44);
    for (int i = 0; i < 60; i++) {
        TermPtr m = gen_term(cfg, rng);
        CHECK(reachable(app(cps(m, Direction::V2N), K()), colon(m, K(), Direction::V2N),
                        Relation::Alg, {20000, true, false})
                  .found());
        CHECK(reachable(app(cps(m, Direction::N2V), K()), colon(m, K(), Direction::N2V),
                        Relation::Lin, {20000, true, false})
                  .found());
    }
}
