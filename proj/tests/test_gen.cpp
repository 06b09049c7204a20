#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlog/error.hpp"
#include "symlog/gen.hpp"
#include "symlog/parse.hpp"

#include <set>

using namespace symlog;

namespace {

void collect_sym_atoms(const SymTypePtr& t, std::set<std::string>& out) {
    switch (t->kind) {
    case SymType::Kind::Atom:
    case SymType::Kind::NegAtom:
        out.insert(t->name);
        return;
    case SymType::Kind::And:
    case SymType::Kind::Or:
        collect_sym_atoms(t->left, out);
        collect_sym_atoms(t->right, out);
        return;
    case SymType::Kind::Bottom:
        return;
    }
}

void collect_lmm_atoms(const LmmTypePtr& t, std::set<std::string>& out) {
    switch (t->kind) {
    case LmmType::Kind::Atom:
        out.insert(t->name);
        return;
    case LmmType::Kind::Neg:
        collect_lmm_atoms(t->a, out);
        return;
    case LmmType::Kind::Arrow:
        collect_lmm_atoms(t->a, out);
        collect_lmm_atoms(t->b, out);
        return;
    }
}

} // namespace

TEST_CASE("every generated propositional term typechecks at its type") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.max_size = 20;
        GenSym g = gen_sym(cfg);
        SymTypeResult r = typecheck_sym(g.ctx, g.term);
        CHECK(type_eq(r.type, g.type));
    }
}

TEST_CASE("every generated computational term typechecks") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.max_size = 20;
        GenLmm g = gen_lmm(cfg);
        auto ty = typecheck_lmm(g.seq, g.term);
        if (lmm_sort(g.term) == LmmSort::C) {
            CHECK(!ty.has_value());
        } else {
            CHECK(ty.has_value());
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    GenConfig cfg;
    cfg.seed = 42;
    GenSym g1 = gen_sym(cfg);
    GenSym g2 = gen_sym(cfg);
    CHECK(print_term(g1.term) == print_term(g2.term));
    CHECK(print_type(g1.type) == print_type(g2.type));
    CHECK(g1.ctx.items().size() == g2.ctx.items().size());

    GenLmm h1 = gen_lmm(cfg);
    GenLmm h2 = gen_lmm(cfg);
    CHECK(print_lmm(h1.term) == print_lmm(h2.term));
    CHECK(alpha_eq_lmm(h1.term, h2.term));
}

TEST_CASE("different seeds reach different terms") {
    std::set<std::string> sym_keys, lmm_keys;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        sym_keys.insert(canon_key(gen_sym(cfg).term));
        lmm_keys.insert(canon_key_lmm(gen_lmm(cfg).term));
    }
    CHECK(sym_keys.size() >= 10);
    CHECK(lmm_keys.size() >= 10);
}

TEST_CASE("the smallest budget yields a variable") {
    GenConfig cfg;
    cfg.max_size = 1;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg.seed = seed;
        GenSym g = gen_sym(cfg);
        CHECK(g.term->kind == SymTerm::Kind::Var);
        CHECK(g.ctx.items().size() == 1);
        GenLmm h = gen_lmm(cfg);
        CHECK((h.term->kind == LmmTerm::Kind::LVar ||
               h.term->kind == LmmTerm::Kind::RVar));
    }
}

TEST_CASE("the seeded dual pair is always present") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        GenSym g = gen_sym(cfg);
        REQUIRE(g.ctx.find("x0") != nullptr);
        REQUIRE(g.ctx.find("x1") != nullptr);
        CHECK(type_eq(neg_type(*g.ctx.find("x0")), *g.ctx.find("x1")));
    }
}

TEST_CASE("full bottom bias forces the bottom type and command roots") {
    GenConfig cfg;
    cfg.max_size = 10;
    cfg.bottom_bias = 1.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        cfg.seed = seed;
        CHECK(type_eq(gen_sym(cfg).type, sym_bottom()));
        CHECK(lmm_sort(gen_lmm(cfg).term) == LmmSort::C);
    }
}

TEST_CASE("zero bottom bias never reaches the bottom type") {
    GenConfig cfg;
    cfg.max_size = 10;
    cfg.bottom_bias = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        cfg.seed = seed;
        CHECK(!type_eq(gen_sym(cfg).type, sym_bottom()));
        CHECK(lmm_sort(gen_lmm(cfg).term) != LmmSort::C);
    }
}

TEST_CASE("atoms are drawn from the configured pool") {
    GenConfig cfg;
    cfg.atom_pool = {"d"};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg.seed = seed;
        GenSym g = gen_sym(cfg);
        std::set<std::string> atoms;
        for (const auto& [name, ty] : g.ctx.items()) {
            collect_sym_atoms(ty, atoms);
        }
        collect_sym_atoms(g.type, atoms);
        CHECK(atoms == std::set<std::string>{"d"});

        GenLmm h = gen_lmm(cfg);
        std::set<std::string> latoms;
        for (const auto& [name, ty] : h.seq.gamma()) collect_lmm_atoms(ty, latoms);
        for (const auto& [name, ty] : h.seq.delta()) collect_lmm_atoms(ty, latoms);
        CHECK(latoms == std::set<std::string>{"d"});
    }
}

TEST_CASE("broken configurations are rejected") {
    GenConfig zero;
    zero.max_size = 0;
    CHECK_THROWS_AS(gen_sym(zero), Error);
    CHECK_THROWS_AS(gen_lmm(zero), Error);
    GenConfig empty;
    empty.atom_pool = {};
    CHECK_THROWS_AS(gen_sym(empty), Error);
    CHECK_THROWS_AS(gen_lmm(empty), Error);
}

TEST_CASE("shrinking drives an always-failing input to a variable") {
    SymContext ctx = parse_sym_context("y: ~a, z: a");
    SymTermPtr m = parse_sym_term("\\w:b. (y * z)");
    ShrunkSym s = shrink_sym(ctx, m, [](const SymContext&, const SymTermPtr&) {
        return true;
    });
    CHECK(s.term->kind == SymTerm::Kind::Var);

    LmmSequent seq = parse_lmm_sequent("x:a |- al:a");
    LmmTermPtr u = parse_lmm_term("mut w:a. < x | al >");
    ShrunkLmm l = shrink_lmm(seq, u, [](const LmmSequent&, const LmmTermPtr&) {
        return true;
    });
    CHECK(l.term->kind == LmmTerm::Kind::LVar);
}

TEST_CASE("shrinking keeps the property that failed") {
    SymContext ctx = parse_sym_context("y: ~a, z: a");
    SymTermPtr m = parse_sym_term("\\w:b. (y * z)");
    auto has_star = [](const SymContext&, const SymTermPtr& t) {
        std::function<bool(const SymTermPtr&)> walk =
            [&](const SymTermPtr& u) -> bool {
            if (u->kind == SymTerm::Kind::Star) return true;
            for (int i = 0; i < child_count(u); ++i) {
                if (walk(child_at(u, i))) return true;
            }
            return false;
        };
        return walk(t);
    };
    ShrunkSym s = shrink_sym(ctx, m, has_star);
    CHECK(s.term->kind == SymTerm::Kind::Star);
    CHECK(s.term->a->kind == SymTerm::Kind::Var);
    CHECK(s.term->b->kind == SymTerm::Kind::Var);
    // a second pass finds nothing more to remove
    ShrunkSym s2 = shrink_sym(s.ctx, s.term, has_star);
    CHECK(alpha_eq(s2.term, s.term));
}

TEST_CASE("shrinking a passing input is a usage error") {
    SymContext ctx = parse_sym_context("z: a");
    SymTermPtr m = parse_sym_term("z");
    CHECK_THROWS_AS(shrink_sym(ctx, m,
                               [](const SymContext&, const SymTermPtr&) {
                                   return false;
                               }),
                    Error);
    LmmSequent seq = parse_lmm_sequent("x:a");
    CHECK_THROWS_AS(shrink_lmm(seq, parse_lmm_term("x"),
                               [](const LmmSequent&, const LmmTermPtr&) {
                                   return false;
                               }),
                    Error);
}
