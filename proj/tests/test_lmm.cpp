#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlog/error.hpp"
#include "symlog/lmm_reduce.hpp"
#include "symlog/parse.hpp"

using namespace symlog;

namespace {

LmmTypePtr ty(const std::string& s) { return parse_lmm_type(s); }
LmmTermPtr mk(const std::string& s) { return parse_lmm_term(s); }
LmmSequent sq(const std::string& s) { return parse_lmm_sequent(s); }

} // namespace

TEST_CASE("double negations cancel") {
    CHECK(lmm_type_eq(canonicalize_type(lmm_neg(lmm_neg(lmm_atom("a")))),
                      lmm_atom("a")));
    CHECK(lmm_type_eq(ty("a -> ~~b"), ty("a -> b")));
    CHECK(lmm_type_eq(ty("~~~a"), ty("~a")));
    CHECK(!lmm_type_eq(ty("~a"), ty("a")));
    // idempotent
    LmmTypePtr once = canonicalize_type(ty("~~(a -> ~~b)"));
    CHECK(lmm_type_eq(canonicalize_type(once), once));
}

TEST_CASE("type complexity counts arrows through negation") {
    CHECK(cxty_lmm_type(ty("a")) == 0);
    CHECK(cxty_lmm_type(ty("a -> b")) == 1);
    CHECK(cxty_lmm_type(ty("~(a -> b)")) == 1);
    CHECK(cxty_lmm_type(ty("(a -> b) -> ~~c")) == 2);
    CHECK(cxty_lmm_type(ty("~~a -> b")) == cxty_lmm_type(ty("a -> b")));
}

TEST_CASE("arrow is right-associative in the concrete syntax") {
    CHECK(lmm_type_eq(ty("a -> b -> c"), lmm_arrow(ty("a"), ty("b -> c"))));
}

TEST_CASE("sorts are fixed by the constructors") {
    CHECK(lmm_sort(mk("x")) == LmmSort::L);
    CHECK(lmm_sort(mk("\\x:a. x")) == LmmSort::L);
    CHECK(lmm_sort(mk("bar(al)")) == LmmSort::L);
    CHECK(lmm_sort(mk("tilde(x)")) == LmmSort::R);
    CHECK(lmm_sort(mk("mut x:a. < x | al >")) == LmmSort::R);
    CHECK(lmm_sort(mk("< x | al >")) == LmmSort::C);
    // cons takes an l-term head and an r-term tail
    CHECK(lmm_sort(mk("x . al")) == LmmSort::R);
    CHECK_THROWS_AS(lmm_cut(lmm_lvar("x"), lmm_lvar("y")), Error);
    CHECK_THROWS_AS(lmm_cons(lmm_rvar("al"), lmm_rvar("be")), Error);
}

TEST_CASE("typing variables and cuts") {
    CHECK(lmm_type_eq(*typecheck_lmm(sq("x:a"), mk("x")), ty("a")));
    // a bare identifier parses as an l-variable; the sequent flips it
    LmmSequent dal = sq("|- al:a");
    CHECK(lmm_type_eq(*typecheck_lmm(dal, lmm_resort_var(mk("al"), dal)),
                      ty("a")));
    // a well-typed command has no type of its own
    CHECK(!typecheck_lmm(sq("x:a |- al:a"), mk("< x | al >")).has_value());
    CHECK_THROWS_AS(typecheck_lmm(sq("x:a |- al:b"), mk("< x | al >")), Error);
    CHECK_THROWS_AS(typecheck_lmm(LmmSequent{}, mk("bar(tilde(x))")), Error);
}

TEST_CASE("typing binders") {
    CHECK(lmm_type_eq(*typecheck_lmm(sq("y:b"), mk("\\x:a. y")), ty("a -> b")));
    // mu discharges its covariable
    CHECK(lmm_type_eq(*typecheck_lmm(sq("x:a"), mk("mu al:a. < x | al >")),
                      ty("a")));
    CHECK(lmm_type_eq(*typecheck_lmm(sq("|- be:a"), mk("mut x:a. < x | be >")),
                      ty("a")));
    // bar and tilde negate
    CHECK(lmm_type_eq(*typecheck_lmm(sq("|- al:a"), mk("bar(al)")), ty("~a")));
    CHECK(lmm_type_eq(*typecheck_lmm(sq("x:a"), mk("tilde(x)")), ty("~a")));
    CHECK(lmm_type_eq(*typecheck_lmm(sq("x:~a"), mk("tilde(x)")), ty("a")));
}

TEST_CASE("typing an application-shaped cut") {
    CHECK(!typecheck_lmm(sq("y:a |- al:a"), mk("< \\x:a. x | y . al >"))
               .has_value());
    // head type must match the domain
    CHECK_THROWS_AS(
        typecheck_lmm(sq("y:b |- al:a"), mk("< \\x:a. x | y . al >")), Error);
}

TEST_CASE("annotations are compared up to double negation") {
    CHECK(alpha_eq_lmm(mk("\\x:~~a. x"), mk("\\x:a. x")));
    CHECK(alpha_eq_lmm(mk("\\x:a. x"), mk("\\y:a. y")));
    CHECK(!alpha_eq_lmm(mk("\\x:~a. x"), mk("\\x:a. x")));
    CHECK(lmm_type_eq(*typecheck_lmm(LmmSequent{}, mk("\\x:~~a. x")),
                      *typecheck_lmm(LmmSequent{}, mk("\\x:a. x"))));
}

TEST_CASE("substitution on both variable kinds") {
    CHECK(alpha_eq_lmm(subst_r(mk("< y | al >"), "al", mk("tilde(z)")),
                       mk("< y | tilde(z) >")));
    // bound occurrences stay put
    CHECK(alpha_eq_lmm(subst_l(mk("mut x:a. < x | be >"), "x", mk("y")),
                       mk("mut x:a. < x | be >")));
    // every free occurrence is replaced
    CHECK(alpha_eq_lmm(subst_l(mk("< x | tilde(x) >"), "x", mk("y")),
                       mk("< y | tilde(y) >")));
}

TEST_CASE("substitution avoids capture across binder kinds") {
    // substituting a term mentioning the covariable al under mu al
    LmmTermPtr u = mk("mu al:a. < x | al >");
    LmmTermPtr r = subst_l(u, "x", mk("mu be:b. < y | al >"));
    // the outer binder must have been renamed away from al
    CHECK(alpha_eq_lmm(r, mk("mu ga:a. < mu be:b. < y | al > | ga >")));
}

TEST_CASE("free variable sets are per kind") {
    LmmTermPtr u = mk("< \\x:a. y | mut z:b. < z | al > >");
    CHECK(fv_l(u) == std::set<std::string>{"y"});
    CHECK(fv_r(u) == std::set<std::string>{"al"});
    CHECK(count_free_l(mk("< x | tilde(x) >"), "x") == 2);
    CHECK(count_free_r(mk("mu al:a. < x | al >"), "al") == 0);
}

TEST_CASE("purity excludes the complement formers and negated annotations") {
    CHECK(is_pure_lmm(mk("< \\x:a. x | y . al >")));
    CHECK(!is_pure_lmm(mk("bar(al)")));
    CHECK(!is_pure_lmm(mk("tilde(x)")));
    CHECK(!is_pure_lmm(mk("\\x:~a. x")));
}

TEST_CASE("complexity counts formers") {
    CHECK(cxty_lmm(mk("x")) == 0);
    CHECK(cxty_lmm(mk("\\x:a. x")) == 1);
    CHECK(cxty_lmm(mk("< x | al >")) == 0);
    CHECK(cxty_lmm(mk("bar(tilde(x))")) == 2);
    CHECK(cxty_lmm(mk("< mu al:a. < x | al > | tilde(y) >")) == 2);
}

TEST_CASE("the mu against mu-tilde cut matches both rules") {
    LmmTermPtr u = mk("< mu al:a. < x | be > | mut z:a. < y | ga > >");
    auto occs = find_redexes_lmm(u, kAllLmmRules);
    REQUIRE(occs.size() == 2);
    CHECK(occs[0].path.empty());
    CHECK(occs[1].path.empty());
    CHECK(occs[0].rule == LmmRule::Mu);
    CHECK(occs[1].rule == LmmRule::MuTilde);
    CHECK(alpha_eq_lmm(reduce_at_lmm(u, occs[0]), mk("< x | be >")));
    CHECK(alpha_eq_lmm(reduce_at_lmm(u, occs[1]), mk("< y | ga >")));
}

TEST_CASE("complement rules") {
    auto occs = find_redexes_lmm(mk("bar(tilde(x))"), kAllLmmRules);
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].rule == LmmRule::Cl1L);
    CHECK(alpha_eq_lmm(reduce_at_lmm(mk("bar(tilde(x))"), occs[0]), mk("x")));

    auto o2 = find_redexes_lmm(mk("tilde(bar(al))"), kAllLmmRules);
    REQUIRE(o2.size() == 1);
    CHECK(o2[0].rule == LmmRule::Cl1R);

    LmmTermPtr c = mk("< bar(al) | tilde(x) >");
    auto o3 = find_redexes_lmm(c, kAllLmmRules);
    REQUIRE(o3.size() == 1);
    CHECK(o3[0].rule == LmmRule::Cl2);
    CHECK(alpha_eq_lmm(reduce_at_lmm(c, o3[0]), mk("< x | al >")));
}

TEST_CASE("complement steps strictly shrink the term") {
    for (const char* src : {"bar(tilde(x))", "tilde(bar(al))",
                            "< bar(al) | tilde(x) >"}) {
        LmmTermPtr u = mk(src);
        auto occs = find_redexes_lmm(u, kAllLmmRules);
        REQUIRE(!occs.empty());
        CHECK(cxty_lmm(reduce_at_lmm(u, occs[0])) < cxty_lmm(u));
    }
}

TEST_CASE("eta-like rules respect their freshness side conditions") {
    // al free in the body: not an s_l redex
    CHECK(find_redexes_lmm(mk("mu al:a. < bar(al) | al >"), kAllLmmRules).empty());
    auto occs = find_redexes_lmm(mk("mu al:a. < x | al >"), kAllLmmRules);
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].rule == LmmRule::SL);
    CHECK(alpha_eq_lmm(reduce_at_lmm(mk("mu al:a. < x | al >"), occs[0]),
                       mk("x")));

    auto o2 = find_redexes_lmm(mk("mut x:a. < x | al >"), kAllLmmRules);
    REQUIRE(o2.size() == 1);
    CHECK(o2[0].rule == LmmRule::SR);
    CHECK(find_redexes_lmm(mk("mut x:a. < x | tilde(x) >"), kAllLmmRules)
              .empty());
}

TEST_CASE("the lambda rule builds a mu-tilde binding") {
    LmmTermPtr u = mk("< \\x:a. y | z . al >");
    auto occs = find_redexes_lmm(u, kAllLmmRules);
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].rule == LmmRule::Lambda);
    CHECK(alpha_eq_lmm(reduce_at_lmm(u, occs[0]),
                       mk("< z | mut x:a. < y | al > >")));
}

TEST_CASE("the critical pair normalizes to two different commands") {
    LmmTermPtr u = mk("< mu al:a. < x | be > | mut z:a. < y | ga > >");
    LmmTrace mu_first = normalize_lmm(u, LmmStrategy::LeftmostOutermost, 100,
                                      kAllLmmRules, MuOverlap::PriorityMu);
    LmmTrace mut_first = normalize_lmm(u, LmmStrategy::LeftmostOutermost, 100,
                                       kAllLmmRules, MuOverlap::PriorityMuTilde);
    CHECK(mu_first.status == "normal-form");
    CHECK(mut_first.status == "normal-form");
    CHECK(alpha_eq_lmm(mu_first.end(), mk("< x | be >")));
    CHECK(alpha_eq_lmm(mut_first.end(), mk("< y | ga >")));
    CHECK(!alpha_eq_lmm(mu_first.end(), mut_first.end()));
}

TEST_CASE("normal terms produce empty traces") {
    LmmTrace t = normalize_lmm(mk("< x | al >"),
                               LmmStrategy::LeftmostOutermost, 100);
    CHECK(t.status == "normal-form");
    CHECK(t.length() == 0);
}

TEST_CASE("reduction preserves command well-typedness") {
    LmmSequent s = sq("x:a, y:a |- al:a, be:a");
    LmmTermPtr u = mk("< \\w:a. y | x . be >");
    CHECK(!typecheck_lmm(s, u).has_value());
    for (const auto& occ : find_redexes_lmm(u, kAllLmmRules)) {
        LmmTermPtr v = reduce_at_lmm(u, occ);
        CHECK(!typecheck_lmm(s, v).has_value()); // still a well-typed command
    }
}

TEST_CASE("sequent zones reject duplicates but stay independent") {
    CHECK_THROWS_AS(sq("x:a, x:b"), Error);
    CHECK_THROWS_AS(sq("|- al:a, al:b"), Error);
    LmmSequent s = sq("x:a |- x:b"); // same name on both sides is fine
    CHECK(lmm_type_eq(*s.find_l("x"), ty("a")));
    CHECK(lmm_type_eq(*s.find_r("x"), ty("b")));
}

TEST_CASE("rule names round-trip") {
    for (LmmRule r : {LmmRule::Lambda, LmmRule::Mu, LmmRule::MuTilde,
                      LmmRule::SL, LmmRule::SR, LmmRule::Cl1L, LmmRule::Cl1R,
                      LmmRule::Cl2})
        CHECK(lmm_rule_from_name(lmm_rule_name(r)) == r);
    CHECK(!lmm_rule_from_name("sigma").has_value());
}
