#include "alc/term.hpp"

#include "alc/harness.hpp"
#include "alc/syntax.hpp"

#include <doctest.h>

using namespace alc;

namespace {

TermPtr P(const std::string& s) { return parse_term(s); }

}  // namespace

TEST_CASE("free variables") {
    CHECK(free_vars(P("\\x.x")).empty());
    CHECK(free_vars(P("1/2.y + 1/3.z")) == std::set<VarName>{src_var("y"), src_var("z")});
    CHECK(free_vars(P("(\\x.f x x) (1/2.y + 1/2.z)")) ==
          std::set<VarName>{src_var("f"), src_var("y"), src_var("z")});
}

TEST_CASE("substitution") {
    CHECK(alpha_eq(substitute(P("f x x"), src_var("x"), P("y")), P("f y y")));
    // capture avoidance renames the binder
    TermPtr renamed = substitute(P("\\y.x"), src_var("x"), P("y"));
    CHECK(alpha_eq(renamed, P("\\z.y")));
    CHECK(alpha_eq(substitute(P("\\f.f x x"), src_var("x"), P("y+z")),
                   P("\\f.f (y+z) (y+z)")));
}

TEST_CASE("substitution cannot rename the continuation binder") {
    TermPtr m = lam(cont_k(), var("y"));
    CHECK_THROWS_AS(substitute(m, src_var("y"), var(cont_k())), TermError);
    // the intermediate namespace has spare names, so this one renames
    TermPtr n = lam(interm_var("b"), app(var("x"), var(interm_var("b"))));
    TermPtr r = substitute(n, src_var("x"), var(interm_var("b")));
    CHECK(alpha_eq(r, lam(interm_var("b1"),
                          app(var(interm_var("b")), var(interm_var("b1"))))));
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(P("\\x.x"), P("\\y.y")));
    CHECK(!alpha_eq(P("\\x.x y"), P("\\y.y y")));
    CHECK(alpha_eq(P("1/2.(\\x.x) + m"), P("1/2.(\\z.z) + m")));
    // namespaces are not interchangeable
    CHECK(!alpha_eq(lam(cont_k(), var(cont_k())), P("\\y.y")));
    // but renaming within the intermediate namespace is fine
    CHECK(alpha_eq(lam(interm_var("b"), var(interm_var("b"))),
                   lam(interm_var("b1"), var(interm_var("b1")))));
}

TEST_CASE("value recognition") {
    CHECK(is_value(P("1/2.y + 1/2.z")));
    CHECK(!is_value(P("(\\x.x) y")));
    CHECK(is_value(P("0")));
    CHECK(!is_base_value(P("0")));
    CHECK(is_base_value(P("x")));
    CHECK(is_base_value(P("\\x.x y")));
}

TEST_CASE("canonicalize_linear examples") {
    CHECK(alpha_eq(canonicalize_linear(P("2.x + 3.x")), P("5.x")));
    CHECK(alpha_eq(canonicalize_linear(P("1.(\\x.x)")), P("\\x.x")));
    CHECK(alpha_eq(canonicalize_linear(P("0.(f x)")), P("0")));
    CHECK(alpha_eq(canonicalize_linear(P("2.(3.m) + 0")), P("6.m")));
    CHECK(alpha_eq(canonicalize_linear(P("x + 0 + -1.x")), P("0")));
    // merging is up to alpha equivalence
    CHECK(alpha_eq(canonicalize_linear(P("(\\x.x) + (\\y.y)")), P("2.(\\x.x)")));
    // no canonicalization under a binder
    TermPtr frozen = P("\\x.1.x + 0");
    CHECK(alpha_eq(canonicalize_linear(frozen), frozen));
    // application arguments are frozen too, functions are not
    CHECK(alpha_eq(canonicalize_linear(P("(1.f) (1.x)")), P("f (1.x)")));
}

TEST_CASE("canonicalize_linear properties on random terms") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(11);
    for (int i = 0; i < 300; i++) {
        TermPtr m = gen_term(cfg, rng);
        TermPtr c1 = canonicalize_linear(m);
        CHECK(alpha_eq(canonicalize_linear(c1), c1));
        if (is_value(m)) CHECK(is_value(c1));
        // alpha-equal inputs canonicalize to alpha-equal outputs
        TermPtr v1 = sum(lam(src_var("q"), sum(var("q"), m)), m);
        TermPtr v2 = sum(lam(src_var("r"), sum(var("r"), m)), m);
        CHECK(alpha_eq(canonicalize_linear(v1), canonicalize_linear(v2)));
    }
}

TEST_CASE("substitution free-variable property") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(12);
    for (int i = 0; i < 300; i++) {
        TermPtr m = gen_term(cfg, rng);
        TermPtr n = gen_term_depth(cfg, rng, 3, false);
        VarName x = rng.pick(cfg.var_pool);
        auto fv_m = free_vars(m);
        auto fv_n = free_vars(n);
        TermPtr r = substitute(m, x, n);
        std::set<VarName> bound = fv_m;
        bound.erase(x);
        if (fv_m.count(x)) bound.insert(fv_n.begin(), fv_n.end());
        CHECK(free_vars(r) == bound);
    }
}

TEST_CASE("alpha equivalence is a congruence") {
    GenConfig cfg = GenConfig::defaults();
    Rng rng(13);
    for (int i = 0; i < 200; i++) {
        TermPtr m = gen_term(cfg, rng);
        // an alpha-variant: bind a fresh variable and rename the binder
        TermPtr v1 = lam(src_var("q"), sum(var("q"), m));
        TermPtr v2 = lam(src_var("r"), sum(var("r"), m));
        CHECK(alpha_eq(v1, v2));
        CHECK(nameless_key(v1) == nameless_key(v2));
        TermPtr n = gen_term(cfg, rng);
        CHECK(alpha_eq(sum(m, n), sum(m, n)));
        if (!alpha_eq(m, n)) CHECK(!alpha_eq(lam(src_var("q"), m), lam(src_var("q"), n)));
        CHECK((nameless_key(m) == nameless_key(n)) == alpha_eq(m, n));
        // congruence: equal pieces compose to equal terms
        CHECK(alpha_eq(sum(v1, n), sum(v2, n)));
        CHECK(alpha_eq(app(v1, n), app(v2, n)));
    }
}
