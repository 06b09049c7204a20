#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlog/bridge.hpp"
#include "symlog/error.hpp"
#include "symlog/parse.hpp"

using namespace symlog;

namespace {

SymTypePtr sty(const std::string& s) { return parse_sym_type(s); }
SymTermPtr stm(const std::string& s) { return parse_sym_term(s); }
LmmTypePtr lty(const std::string& s) { return parse_lmm_type(s); }
LmmTermPtr ltm(const std::string& s) { return parse_lmm_term(s); }
LmmSequent sq(const std::string& s) { return parse_lmm_sequent(s); }

LmmRedexOccurrence only_redex(const LmmTermPtr& u, unsigned rules) {
    auto occs = find_redexes_lmm(u, rules);
    REQUIRE(occs.size() == 1);
    return occs[0];
}

} // namespace

TEST_CASE("types translate to the propositional side") {
    CHECK(type_eq(type_e(lty("a")), sty("a")));
    CHECK(type_eq(type_e(lty("a -> b")), sty("~a \\/ b")));
    CHECK(type_eq(type_e(lty("~(a -> b)")), sty("a /\\ ~b")));
    CHECK(type_eq(type_e(lty("~~a")), sty("a")));
    CHECK(type_eq(type_e(lty("(a -> b) -> c")), sty("(a /\\ ~b) \\/ c")));
}

TEST_CASE("contexts translate with negated covariable images") {
    CHECK(negated_name("al") == "!al");
    SymContext c1 = context_e(sq("x:a"));
    REQUIRE(c1.find("x") != nullptr);
    CHECK(type_eq(*c1.find("x"), sty("a")));
    SymContext c2 = context_e(sq("|- al:a -> b"));
    REQUIRE(c2.find("!al") != nullptr);
    CHECK(type_eq(*c2.find("!al"), sty("a /\\ ~b")));
}

TEST_CASE("term translation to the propositional side") {
    LmmSequent s = sq("x:a, y:a |- al:a");
    CHECK(alpha_eq(term_e(s, ltm("x")), stm("x")));
    CHECK(alpha_eq(term_e(s, ltm("bar(tilde(x))")), stm("x")));
    CHECK(alpha_eq(term_e(s, ltm("x . tilde(y)")), stm("<x, y>")));
    // the covariable image carries the unparseable generated name
    SymTermPtr nal = sym_var(negated_name("al"));
    CHECK(alpha_eq(term_e(s, ltm("< x | al >")), sym_star(nal, stm("x"))));
    CHECK(alpha_eq(term_e(s, ltm("mut z:a. < z | al >")),
                   sym_lam("z", sym_atom("a"), sym_star(nal, sym_var("z")))));
    CHECK(alpha_eq(term_e(s, ltm("mu be:a. < x | be >")),
                   stm("\\w:~a. (w * x)")));
}

TEST_CASE("translated terms take the translated type") {
    LmmSequent s = sq("x:a |- al:a, be:b");
    for (const char* src : {"x", "\\z:b. z", "mu ga:b. < x | al >", "bar(al)",
                            "tilde(x)", "mut w:a. < w | al >"}) {
        LmmTermPtr u = ltm(src);
        auto ut = typecheck_lmm(s, u);
        REQUIRE(ut.has_value());
        SymTypeResult r = typecheck_sym(context_e(s), term_e(s, u));
        SymTypePtr want = type_e(*ut);
        if (lmm_sort(u) == LmmSort::R)
            want = neg_type(want);
        CHECK(type_eq(r.type, want));
    }
    // commands land at the command type
    CHECK(type_eq(
        typecheck_sym(context_e(s), term_e(s, ltm("< x | al >"))).type,
        sym_bottom()));
}

TEST_CASE("types translate to the computational side") {
    CHECK(lmm_type_eq(type_f(sty("a")), lty("a")));
    CHECK(lmm_type_eq(type_f(sty("~a")), lty("~a")));
    CHECK(lmm_type_eq(type_f(sty("a /\\ b")), lty("~(a -> ~b)")));
    CHECK(lmm_type_eq(type_f(sty("a \\/ b")), lty("~a -> b")));
    CHECK_THROWS_AS(type_f(sym_bottom()), Error);
    for (const char* s : {"a", "a /\\ b", "(a \\/ ~b) /\\ c"}) {
        SymTypePtr t = sty(s);
        CHECK(lmm_type_eq(type_f(neg_type(t)), lmm_neg(type_f(t))));
    }
}

TEST_CASE("term translation to the computational side") {
    SymContext ctx = parse_sym_context("p: ~a, q: a");
    CHECK(alpha_eq_lmm(term_f(ctx, stm("q")), ltm("q")));
    CHECK(alpha_eq_lmm(term_f(ctx, stm("(p * q)")), ltm("< q | tilde(p) >")));
    CHECK(alpha_eq_lmm(term_f(ctx, stm("\\x:a. (p * x)")),
                       ltm("bar(mut x:a. < x | tilde(p) >)")));
    CHECK(alpha_eq_lmm(term_f(ctx, stm("<q, p>")), ltm("bar(q . tilde(p))")));
}

TEST_CASE("the translated image typechecks in the translated sequent") {
    SymContext ctx = parse_sym_context("p: ~a, q: a, y: a /\\ b");
    for (const char* src : {"q", "(p * q)", "\\x:a. (p * x)", "<q, p>",
                            "inl[b] q", "\\z:~a. (y * inl[~b] z)"}) {
        SymTermPtr m = stm(src);
        SymTypeResult before = typecheck_sym(ctx, m);
        LmmSequent s = context_f(ctx);
        auto after = typecheck_lmm(s, term_f(ctx, m));
        if (type_eq(before.type, sym_bottom())) {
            CHECK(!after.has_value());
        } else {
            REQUIRE(after.has_value());
            CHECK(lmm_type_eq(*after, type_f(before.type)));
        }
    }
}

TEST_CASE("the composite translation skips the round-trip") {
    LmmSequent s = sq("x:a, z:~a |- al:a");
    CHECK(alpha_eq_lmm(bigT(s, ltm("x")), ltm("x")));
    CHECK(alpha_eq_lmm(bigT(s, ltm("bar(tilde(x))")), ltm("x")));
    CHECK(alpha_eq_lmm(bigT(s, ltm("< x | tilde(z) >")),
                       ltm("< x | tilde(z) >")));
    // covariables pass through as negated l-variables
    CHECK(alpha_eq_lmm(bigT(s, ltm("mu be:a. < x | be >")),
                       ltm("bar(mut nbe:~a. < x | tilde(nbe) >)")));
}

TEST_CASE("computational steps are simulated propositionally") {
    LmmSequent s = sq("x:a, z:~a |- al:a");

    // mu: one step
    LmmTermPtr mu_cut = ltm("< mu ga:a. < x | al > | tilde(z) >");
    CHECK(!typecheck_lmm(s, mu_cut).has_value());
    SimVerdict v1 = check_sim_e(s, mu_cut, only_redex(mu_cut, kAllLmmRules));
    CHECK(v1.pass());
    REQUIRE(v1.sym_trace.has_value());
    CHECK(v1.sym_trace->length() == 1);
    CHECK(v1.sym_trace->steps[0].occ.rule == SymRule::BetaBot);

    // s_l: one step at the mirrored eta
    LmmTermPtr sl = ltm("mu ga:a. < x | ga >");
    SimVerdict v2 = check_sim_e(s, sl, only_redex(sl, kAllLmmRules));
    CHECK(v2.pass());
    REQUIRE(v2.sym_trace.has_value());
    CHECK(v2.sym_trace->length() == 1);
    CHECK(v2.sym_trace->steps[0].occ.rule == SymRule::EtaBot);

    // lambda: a longer administrative chain
    LmmTermPtr lam_cut = ltm("< \\w:a. w | x . al >");
    SimVerdict v3 = check_sim_e(s, lam_cut, only_redex(lam_cut, kAllLmmRules));
    CHECK(v3.pass());
    REQUIRE(v3.sym_trace.has_value());
    CHECK(v3.sym_trace->length() >= 1);

    // cl2 rewrites to a star swap: equivalence, not a trace
    LmmTermPtr cl2 = ltm("< bar(al) | tilde(x) >");
    LmmRedexOccurrence occ = only_redex(cl2, kAllLmmRules);
    SimVerdict v4 = check_sim_e(s, cl2, occ);
    CHECK(v4.pass());
    CHECK(v4.method == "equiv");
    CHECK(sym_equiv(term_e(s, cl2), term_e(s, reduce_at_lmm(cl2, occ))));
}

TEST_CASE("simulation also works under a binder") {
    LmmSequent s = sq("x:a, z:~a |- al:a");
    LmmTermPtr u = ltm("mut w:b. < mu ga:a. < x | al > | tilde(z) >");
    auto occs = find_redexes_lmm(u, kAllLmmRules);
    REQUIRE(!occs.empty());
    SimVerdict v = check_sim_e(s, u, occs[0]);
    CHECK(v.pass());
}

TEST_CASE("propositional computation steps map to fixed-length chains") {
    SymContext ctx = parse_sym_context("y: ~a, z: a, p: ~b, q: ~c, r: b");

    SymTermPtr beta = stm("(\\x:a. (y * x) * z)");
    SimVerdict v1 = check_sim_f(ctx, beta, {{}, SymRule::Beta, {}, true});
    CHECK(v1.pass());
    CHECK(v1.method == "chain");
    REQUIRE(v1.lmm_trace.has_value());
    CHECK(v1.lmm_trace->length() == 2);
    CHECK(v1.lmm_trace->steps[0].occ.rule == LmmRule::Cl1R);
    CHECK(v1.lmm_trace->steps[1].occ.rule == LmmRule::MuTilde);

    SymTermPtr betab = stm("(z * \\x:a. (y * x))");
    SimVerdict v2 = check_sim_f(ctx, betab, {{}, SymRule::BetaBot, {}, true});
    CHECK(v2.pass());
    REQUIRE(v2.lmm_trace.has_value());
    CHECK(v2.lmm_trace->length() == 2);
    CHECK(v2.lmm_trace->steps[0].occ.rule == LmmRule::Cl2);

    // first injection: four steps; second: three (no discarded binder to cut)
    SymTermPtr pi1 = stm("(<p, q> * inl[c] r)");
    SimVerdict v3 = check_sim_f(ctx, pi1, {{}, SymRule::Pi, {}, false});
    CHECK(v3.pass());
    REQUIRE(v3.lmm_trace.has_value());
    CHECK(v3.lmm_trace->length() == 4);

    SymContext ctx2 = parse_sym_context("p: ~b, q: ~c, r: c");
    SymTermPtr pi2 = stm("(<p, q> * inr[b] r)");
    SimVerdict v4 = check_sim_f(ctx2, pi2, {{}, SymRule::Pi, {}, false});
    CHECK(v4.pass());
    REQUIRE(v4.lmm_trace.has_value());
    CHECK(v4.lmm_trace->length() == 3);

    SymTermPtr eta = stm("\\x:a. (y * x)");
    SimVerdict v5 = check_sim_f(ctx, eta, {{}, SymRule::Eta, {}, false});
    CHECK(v5.pass());
    REQUIRE(v5.lmm_trace.has_value());
    CHECK(v5.lmm_trace->length() == 2);
}

TEST_CASE("two propositional rules have no computational simulation") {
    // the mirrored projection reaches only the star-swapped image; the
    // checker reports the near miss instead of inventing a chain
    SymContext ctx = parse_sym_context("p: ~b, q: ~c, r: b");
    SymTermPtr pib = stm("(inl[c] r * <p, q>)");
    SimVerdict v1 = check_sim_f(ctx, pib, {{}, SymRule::PiBot, {}, false});
    CHECK(!v1.pass());
    CHECK(!v1.message.empty());

    // the mirrored eta with a variable body: the image is already normal
    SymContext ctx2 = parse_sym_context("y: a");
    SymTermPtr etab = stm("\\x:~a. (x * y)");
    SimVerdict v2 = check_sim_f(ctx2, etab, {{}, SymRule::EtaBot, {}, false});
    CHECK(!v2.pass());
}

TEST_CASE("round-trip through the computational side returns home") {
    SymContext ctx = parse_sym_context("p: ~a, q: a, r: b");
    for (const char* src : {"q", "(p * q)", "\\x:a. (p * x)", "<q, r>"}) {
        SymTermPtr m = stm(src);
        auto t = roundtrip_fe(ctx, m, 3 * cxty_term(m) + 10);
        REQUIRE(t.has_value());
        CHECK(alpha_eq(t->start, term_e(context_f(ctx), term_f(ctx, m))));
        CHECK(alpha_eq(t->end(), m));
    }
    // variables come back with no steps at all
    auto tv = roundtrip_fe(ctx, stm("q"), 10);
    REQUIRE(tv.has_value());
    CHECK(tv->length() == 0);
    // the first injection unwinds a four-step head chain, the second three
    SymTermPtr i1 = stm("inl[b] q");
    auto ti = roundtrip_fe(ctx, i1, 3 * cxty_term(i1) + 10);
    REQUIRE(ti.has_value());
    CHECK(ti->length() == 4);
    CHECK(alpha_eq(ti->end(), i1));
    SymTermPtr i2 = stm("inr[b] q");
    auto tj = roundtrip_fe(ctx, i2, 3 * cxty_term(i2) + 10);
    REQUIRE(tj.has_value());
    CHECK(tj->length() == 3);
    CHECK(alpha_eq(tj->end(), i2));
}

TEST_CASE("round-trip through the propositional side reaches the composite") {
    LmmSequent s = sq("x:a, y:a |- al:a");
    for (const char* src : {"x", "mut z:a. < z | al >", "mu be:a. < x | be >",
                            "< x | al >", "x . al", "bar(al)"}) {
        LmmTermPtr u = ltm(src);
        auto t = roundtrip_ef(s, u, 2 * cxty_lmm(u) + 10);
        REQUIRE(t.has_value());
        CHECK(alpha_eq_lmm(t->end(), bigT(s, u)));
    }
    auto tv = roundtrip_ef(s, ltm("x"), 10);
    REQUIRE(tv.has_value());
    CHECK(tv->length() == 0);
    // each lambda contributes exactly two head steps
    auto tl = roundtrip_ef(s, ltm("\\z:a. z"), 10);
    REQUIRE(tl.has_value());
    CHECK(tl->length() == 2);
}

TEST_CASE("translation commutes with substitution") {
    SymContext ctx = parse_sym_context("n: a, y: ~a");
    SymContext inner = ctx.extended("x", sym_atom("a"));
    CHECK(subst_commutes_f(inner, stm("(y * x)"), "x", stm("n")));
    CHECK(subst_commutes_f(inner, stm("x"), "x", stm("n")));
    CHECK(subst_commutes_f(inner, stm("\\w:b. (y * x)"), "x", stm("n")));

    LmmSequent s = sq("x:a, t:a |- al:a");
    CHECK(subst_commutes_e_l(s, ltm("< x | al >"), "x", ltm("t")));
    CHECK(subst_commutes_e_l(s, ltm("x"), "x", ltm("t")));
    CHECK(subst_commutes_e_l(s, ltm("mu be:a. < x | be >"), "x", ltm("t")));
    CHECK(subst_commutes_e_r(s, ltm("< x | al >"), "al", ltm("tilde(t)")));
    CHECK(subst_commutes_e_r(s, ltm("mut z:a. < z | al >"), "al",
                             ltm("tilde(t)")));
}

TEST_CASE("translation surfaces broken input") {
    // a lambda body must be a term, not a command
    CHECK_THROWS_AS(term_e(sq("x:a |- al:a"), ltm("\\z:b. < x | al >")),
                    Error);
    // injection arguments are typed to pick the annotation
    SymContext empty;
    CHECK_THROWS_AS(term_f(empty, stm("inl[b] w")), Error);
}
