#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlog/error.hpp"
#include "symlog/parse.hpp"
#include "symlog/sym_typing.hpp"

using namespace symlog;

namespace {

SymTypePtr ty(const std::string& s) { return parse_sym_type(s); }
SymTermPtr mk(const std::string& s) { return parse_sym_term(s); }

} // namespace

TEST_CASE("negation swaps atoms and dualizes connectives") {
    CHECK(type_eq(neg_type(sym_atom("a")), sym_neg_atom("a")));
    CHECK(type_eq(neg_type(sym_neg_atom("a")), sym_atom("a")));
    CHECK(type_eq(neg_type(ty("a /\\ b")), ty("~a \\/ ~b")));
    CHECK(type_eq(neg_type(ty("a \\/ b")), ty("~a /\\ ~b")));
}

TEST_CASE("negation is involutive") {
    for (const char* s : {"a", "~b", "a /\\ b", "a \\/ ~b", "(a \\/ ~b) /\\ c",
                          "~a \\/ (b /\\ ~c)"}) {
        SymTypePtr t = ty(s);
        CHECK(type_eq(neg_type(neg_type(t)), t));
    }
}

TEST_CASE("negation rejects the command type") {
    CHECK_THROWS_AS(neg_type(sym_bottom()), Error);
    try {
        neg_type(sym_bottom());
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::Type);
    }
}

TEST_CASE("type complexity counts connectives and survives negation") {
    CHECK(cxty_type(sym_atom("a")) == 0);
    CHECK(cxty_type(sym_bottom()) == 0);
    CHECK(cxty_type(ty("a /\\ (b \\/ c)")) == 2);
    for (const char* s : {"a", "a /\\ b", "(a \\/ b) /\\ (c \\/ ~d)"}) {
        SymTypePtr t = ty(s);
        CHECK(cxty_type(t) == cxty_type(neg_type(t)));
    }
}

TEST_CASE("free variables respect binders") {
    CHECK(free_vars(mk("x")) == std::set<std::string>{"x"});
    CHECK(free_vars(mk("\\x:a. (y * x)")) == std::set<std::string>{"y"});
    // left occurrence free, right one bound
    CHECK(free_vars(mk("<x, \\x:a. x>")) == std::set<std::string>{"x"});
    CHECK(count_free(mk("(x * <x, y>)"), "x") == 2);
    CHECK(count_free(mk("\\x:a. (x * y)"), "x") == 0);
}

TEST_CASE("substitution replaces free occurrences") {
    SymTermPtr n = mk("<z, z>");
    CHECK(alpha_eq(substitute(mk("(x * y)"), "x", n), mk("(<z, z> * y)")));
    CHECK(alpha_eq(substitute(mk("x"), "x", n), n));
    CHECK(alpha_eq(substitute(mk("y"), "x", n), mk("y")));
}

TEST_CASE("substitution avoids capture") {
    // \y. x with x := y must rename the binder
    SymTermPtr r = substitute(mk("\\y:a. (x * y)"), "x", mk("y"));
    CHECK(alpha_eq(r, mk("\\w:a. (y * w)")));
    // binder shadows: no substitution under \x
    CHECK(alpha_eq(substitute(mk("\\x:a. x"), "x", mk("z")), mk("\\x:a. x")));
}

TEST_CASE("simultaneous substitution swaps in one pass") {
    SimSubstitution s;
    s.entries.push_back({"x", mk("y")});
    s.entries.push_back({"y", mk("x")});
    s.declared_type = sym_atom("a");
    CHECK(alpha_eq(apply_sim_subst(mk("(x * y)"), s), mk("(y * x)")));

    SimSubstitution empty;
    CHECK(alpha_eq(apply_sim_subst(mk("(x * y)"), empty), mk("(x * y)")));
}

TEST_CASE("singleton simultaneous substitution agrees with substitute") {
    SimSubstitution s;
    s.entries.push_back({"x", mk("<u, v>")});
    s.declared_type = ty("a /\\ b");
    for (const char* src : {"x", "(x * y)", "\\y:a. (x * y)", "<x, inl[b] x>"}) {
        SymTermPtr m = mk(src);
        CHECK(alpha_eq(apply_sim_subst(m, s), substitute(m, "x", mk("<u, v>"))));
    }
}

TEST_CASE("typing the first projection") {
    SymContext ctx = parse_sym_context("y: a /\\ b");
    SymTermPtr proj1 = mk("\\z:~a. (y * inl[~b] z)");
    SymTypeResult r = typecheck_sym(ctx, proj1);
    // the lambda returns the double negation of a, which is a itself
    CHECK(type_eq(r.type, sym_atom("a")));
    CHECK(r.derivation != nullptr);
}

TEST_CASE("typing basics") {
    SymContext ctx = parse_sym_context("x: a, y: ~a");
    CHECK(type_eq(typecheck_sym(ctx, mk("x")).type, sym_atom("a")));
    CHECK(type_eq(typecheck_sym(ctx, mk("(y * x)")).type, sym_bottom()));
    CHECK(type_eq(typecheck_sym(ctx, mk("<x, y>")).type, ty("a /\\ ~a")));
    CHECK(type_eq(typecheck_sym(ctx, mk("inl[b] x")).type, ty("a \\/ b")));
    CHECK(type_eq(typecheck_sym(ctx, mk("inr[b] x")).type, ty("b \\/ a")));
    CHECK(type_eq(typecheck_sym(ctx, mk("\\z:a. (y * z)")).type, ty("~a")));
}

TEST_CASE("typing failures") {
    SymContext ctx = parse_sym_context("y: a, z: a");
    CHECK_THROWS_AS(typecheck_sym(ctx, mk("(y * z)")), Error); // a is not ~a
    CHECK_THROWS_AS(typecheck_sym(ctx, mk("w")), Error);       // unbound
    CHECK_THROWS_AS(typecheck_sym(ctx, mk("\\x:a. x")), Error); // body not #
    CHECK(!try_type_sym(ctx, mk("(y * z)")).has_value());
    CHECK(try_type_sym(ctx, mk("y")).has_value());
}

TEST_CASE("typechecking is alpha-insensitive and allows shadowing binders") {
    SymContext ctx = parse_sym_context("y: ~a, x: b");
    SymTermPtr m1 = mk("\\x:a. (y * x)");
    SymTermPtr m2 = mk("\\w:a. (y * w)");
    CHECK(alpha_eq(m1, m2));
    CHECK(type_eq(typecheck_sym(ctx, m1).type, typecheck_sym(ctx, m2).type));
}

TEST_CASE("contexts reject duplicate names") {
    SymContext ctx;
    ctx.bind("x", sym_atom("a"));
    CHECK_THROWS_AS(ctx.bind("x", sym_atom("b")), Error);
    CHECK_THROWS_AS(parse_sym_context("x:a, x:b"), Error);
}

TEST_CASE("star-swap equivalence") {
    SymTermPtr p = mk("x");
    SymTermPtr q = mk("y");
    CHECK(sym_equiv(sym_star(p, q), sym_star(q, p)));
    CHECK(sym_equiv(mk("(x * y)"), mk("(x * y)")));
    CHECK(sym_equiv(mk("<(x * y), z>"), mk("<(y * x), z>")));
    CHECK(!sym_equiv(mk("(x * y)"), mk("(x * z)")));
    // alpha folded in
    CHECK(sym_equiv(mk("\\x:a. (x * y)"), mk("\\w:a. (y * w)")));
}

TEST_CASE("canonical keys coincide exactly on alpha-equal terms") {
    CHECK(canon_key(mk("\\x:a. (x * y)")) == canon_key(mk("\\z:a. (z * y)")));
    CHECK(canon_key(mk("\\x:a. (x * y)")) != canon_key(mk("\\x:a. (y * x)")));
}

TEST_CASE("subformula report on variables and projections") {
    SymContext c1 = parse_sym_context("x: a");
    CHECK(subformula_report(typecheck_sym(c1, mk("x")).derivation));

    SymContext c2 = parse_sym_context("y: a /\\ b");
    CHECK(subformula_report(
        typecheck_sym(c2, mk("\\z:~a. (y * inl[~b] z)")).derivation));
}

TEST_CASE("substitution preserves types") {
    SymContext outer = parse_sym_context("n: a, y: ~a");
    SymContext inner = outer.extended("x", sym_atom("a"));
    SymTermPtr m = mk("(y * x)");
    SymTypePtr before = typecheck_sym(inner, m).type;
    SymTypePtr after = typecheck_sym(outer, substitute(m, "x", mk("n"))).type;
    CHECK(type_eq(before, after));
}
