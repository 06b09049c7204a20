#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlog/error.hpp"
#include "symlog/parse.hpp"
#include "symlog/sym_reduce.hpp"

using namespace symlog;

namespace {

SymTermPtr mk(const std::string& s) { return parse_sym_term(s); }

std::string occ_str(const RedexOccurrence& o) {
    std::string s = sym_rule_name(o.rule) + "@[";
    for (size_t i = 0; i < o.path.size(); i++)
        s += (i ? "," : "") + std::to_string(o.path[i]);
    return s + "]";
}

} // namespace

TEST_CASE("redex discovery with a restricted rule set") {
    SymTermPtr m = mk("(\\x:a. (y * x) * z)");
    auto occs = find_redexes(m, nullptr, rule_bit(SymRule::Beta));
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].rule == SymRule::Beta);
    CHECK(occs[0].path.empty());
    CHECK(occs[0].linear); // x occurs once in the body
}

TEST_CASE("redex discovery sees nested eta under the computation redex") {
    SymTermPtr m = mk("(\\x:a. (y * x) * z)");
    auto occs = find_redexes(m, nullptr, kBetaPiEtaRules);
    REQUIRE(occs.size() == 2);
    CHECK(occ_str(occs[0]) == "beta@[]");
    CHECK(occ_str(occs[1]) == "eta@[0]");
}

TEST_CASE("redex order is leftmost-outermost with fixed rule order at ties") {
    SymTermPtr m = mk("(\\x:a. (y * x) * \\w:~a. (w * z))");
    auto occs = find_redexes(m, nullptr, kBetaPiEtaRules);
    REQUIRE(occs.size() == 4);
    CHECK(occ_str(occs[0]) == "beta@[]");
    CHECK(occ_str(occs[1]) == "beta_bot@[]");
    CHECK(occ_str(occs[2]) == "eta@[0]");
    CHECK(occ_str(occs[3]) == "eta_bot@[1]");
}

TEST_CASE("projection redexes") {
    SymTermPtr m = mk("(<p, q> * inl[b] r)");
    auto occs = find_redexes(m, nullptr, kAllSymRules & ~rule_bit(SymRule::Triv));
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].rule == SymRule::Pi);
    CHECK(alpha_eq(reduce_at(m, occs[0]), mk("(p * r)")));

    SymTermPtr m2 = mk("(<p, q> * inr[b] r)");
    auto o2 = find_redexes(m2, nullptr, kBetaPiRules);
    REQUIRE(o2.size() == 1);
    CHECK(alpha_eq(reduce_at(m2, o2[0]), mk("(q * r)")));

    SymTermPtr m3 = mk("(inr[b] r * <p, q>)");
    auto o3 = find_redexes(m3, nullptr, kBetaPiRules);
    REQUIRE(o3.size() == 1);
    CHECK(o3[0].rule == SymRule::PiBot);
    CHECK(alpha_eq(reduce_at(m3, o3[0]), mk("(r * q)")));
}

TEST_CASE("one-step contraction of the five untyped rules") {
    CHECK(alpha_eq(reduce_at(mk("(\\x:a. (y * x) * z)"),
                             {{}, SymRule::Beta, {}, true}),
                   mk("(y * z)")));
    CHECK(alpha_eq(reduce_at(mk("(z * \\x:a. (y * x))"),
                             {{}, SymRule::BetaBot, {}, true}),
                   mk("(y * z)")));
    CHECK(alpha_eq(reduce_at(mk("\\x:a. (y * x)"), {{}, SymRule::Eta, {}, false}),
                   mk("y")));
    CHECK(alpha_eq(reduce_at(mk("\\x:a. (x * y)"), {{}, SymRule::EtaBot, {}, false}),
                   mk("y")));
    CHECK(alpha_eq(reduce_at(mk("(<p, q> * inl[b] r)"), {{}, SymRule::Pi, {}, false}),
                   mk("(p * r)")));
}

TEST_CASE("eta needs the bound variable absent from the partner") {
    // x free in the left part: not an eta redex
    SymTermPtr m = mk("\\x:a. ((x * x) * x)");
    CHECK(find_redexes(m, nullptr, kERules).empty());
}

TEST_CASE("stale occurrences are rejected") {
    SymTermPtr m = mk("(x * y)");
    CHECK_THROWS_AS(reduce_at(m, {{}, SymRule::Beta, {}, false}), Error);
    CHECK_THROWS_AS(reduce_at(m, {{0, 0}, SymRule::Eta, {}, false}), Error);
}

TEST_CASE("pruning needs a typing derivation") {
    SymTermPtr m = mk("(y * \\x:a. (z * w))");
    CHECK_THROWS_AS(find_redexes(m, nullptr, kAllSymRules), Error);

    SymContext ctx = parse_sym_context("y: a, z: ~c, w: c");
    SymTypeResult r = typecheck_sym(ctx, m);
    auto occs = find_redexes(m, r.derivation, rule_bit(SymRule::Triv));
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].rule == SymRule::Triv);
    CHECK(occs[0].path.empty());
    CHECK(occs[0].keep == Path{1, 0});
    CHECK(alpha_eq(reduce_at(m, occs[0]), mk("(z * w)")));
}

TEST_CASE("pruning never lets a binder capture the survivor") {
    // the inner star mentions x, so discarding the lambda would unbind it
    SymTermPtr m = mk("(y * \\x:c. (z * x))");
    SymContext ctx = parse_sym_context("y: c, z: ~c");
    SymTypeResult r = typecheck_sym(ctx, m);
    CHECK(find_redexes(m, r.derivation, rule_bit(SymRule::Triv)).empty());
}

TEST_CASE("normalization of a normal form is an empty trace") {
    ReductionTrace t = normalize(mk("x"), nullptr,
                                 SymStrategy::LeftmostOutermost, 100,
                                 kBetaPiEtaRules);
    CHECK(t.status == "normal-form");
    CHECK(t.length() == 0);
    CHECK(alpha_eq(t.end(), mk("x")));
}

TEST_CASE("projection example normalizes in one step") {
    ReductionTrace t = normalize(mk("(<p, q> * inl[b] r)"), nullptr,
                                 SymStrategy::LeftmostOutermost, 100,
                                 kBetaPiEtaRules);
    CHECK(t.status == "normal-form");
    CHECK(t.length() == 1);
    CHECK(alpha_eq(t.end(), mk("(p * r)")));
    CHECK(find_redexes(t.end(), nullptr, kBetaPiEtaRules).empty());
}

TEST_CASE("strategies agree on the endpoint type but may differ in route") {
    SymContext ctx = parse_sym_context("y: ~a, z: a");
    SymTermPtr m = mk("(\\x:a. (y * x) * \\w:~a. (w * z))");
    SymTypeResult ty0 = typecheck_sym(ctx, m);
    for (SymStrategy s : {SymStrategy::LeftmostOutermost,
                          SymStrategy::RightmostInnermost,
                          SymStrategy::SeededRandom}) {
        ReductionTrace t = normalize(m, ty0.derivation, s, 1000, kAllSymRules, 9);
        CHECK(t.status == "normal-form");
        CHECK(alpha_eq(t.end(), mk("(y * z)")));
    }
}

TEST_CASE("fuel exhaustion is a status, not an error") {
    ReductionTrace t = normalize(mk("(\\x:a. (y * x) * \\w:~a. (w * z))"),
                                 nullptr, SymStrategy::LeftmostOutermost, 1,
                                 kBetaPiEtaRules);
    CHECK(t.status == "fuel-exhausted");
    CHECK(t.length() == 1);
}

TEST_CASE("each step preserves the type") {
    SymContext ctx = parse_sym_context("y: ~a, z: a, p: ~b, q: ~c, r: b");
    for (const char* src :
         {"(\\x:a. (y * x) * z)", "(<p, q> * inl[c] r)", "(inl[c] r * <p, q>)",
          "(z * \\x:a. (y * x))"}) {
        SymTermPtr m = mk(src);
        SymTypeResult before = typecheck_sym(ctx, m);
        for (const auto& occ : find_redexes(m, before.derivation, kAllSymRules)) {
            SymTypeResult after = typecheck_sym(ctx, reduce_at(m, occ));
            CHECK(type_eq(before.type, after.type));
        }
    }
}

TEST_CASE("rule names round-trip") {
    for (SymRule r : {SymRule::Beta, SymRule::BetaBot, SymRule::Eta,
                      SymRule::EtaBot, SymRule::Pi, SymRule::PiBot, SymRule::Triv})
        CHECK(sym_rule_from_name(sym_rule_name(r)) == r);
    CHECK(!sym_rule_from_name("gamma").has_value());
}
