#include "symlog/verify.hpp"

#include "symlog/bridge.hpp"
#include "symlog/error.hpp"
#include "symlog/sym_postpone.hpp"
#include "symlog/sym_sn.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace symlog {

namespace {

constexpr size_t kMaxMessages = 5;

void fail(SuiteResult& r, int sample, const std::string& why) {
    r.failed++;
    if (r.messages.size() < kMaxMessages) {
        std::ostringstream os;
        os << "sample " << sample << ": " << why;
        r.messages.push_back(os.str());
    }
}

std::string path_str(const Path& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.size(); i++) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + "]";
}

GenConfig sample_cfg(const VerifyOptions& opt, std::uint64_t salt, int i,
                     int max_size) {
    GenConfig cfg;
    cfg.seed = opt.seed + salt * 1000003ull + static_cast<std::uint64_t>(i);
    cfg.max_size = max_size;
    return cfg;
}

SuiteResult suite_preservation(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "preservation";
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 11, i, opt.max_size));
        SymTypeResult ty = typecheck_sym(g.ctx, g.term);
        bool ok = true;
        for (const auto& occ : find_redexes(g.term, ty.derivation, kAllSymRules)) {
            SymTermPtr n = reduce_at(g.term, occ);
            auto rt = try_type_sym(g.ctx, n);
            if (!rt || !type_eq(rt->type, g.type)) {
                ok = false;
                fail(r, i, sym_rule_name(occ.rule) + " at " + path_str(occ.path) +
                               " does not preserve the type");
                break;
            }
        }
        if (ok) r.passed++;
    }
    return r;
}

SuiteResult suite_sn(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "sn";
    const SymStrategy strats[] = {SymStrategy::LeftmostOutermost,
                                  SymStrategy::RightmostInnermost,
                                  SymStrategy::SeededRandom};
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 21, i, opt.max_size));
        SymTypeResult ty = typecheck_sym(g.ctx, g.term);
        bool ok = true;
        for (SymStrategy s : strats) {
            ReductionTrace tr = normalize(g.term, ty.derivation, s, opt.fuel,
                                          kAllSymRules,
                                          static_cast<std::uint64_t>(i));
            if (tr.status != "normal-form") {
                ok = false;
                fail(r, i, "normalization did not finish: " + tr.status);
                break;
            }
        }
        if (ok) r.passed++;
    }
    int longest_samples = std::min(opt.samples, 200);
    int longest_size = std::min(opt.max_size, 15);
    for (int i = 0; i < longest_samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 22, i, longest_size));
        SNReport rep = longest_reduction_betapi(g.term, opt.budget);
        if (rep.status == "normalizing")
            r.passed++;
        else
            fail(r, i, "longest-reduction search reported " + rep.status);
    }
    return r;
}

// Closed inhabitants of the first pool atom, available under every generated
// context through the seeded complementary pair.
SymTermPtr atom_inhabitant(int variant) {
    SymTermPtr x0 = sym_var("x0");
    SymTypePtr na = sym_neg_atom("a");
    switch (variant % 3) {
    case 0:
        return x0;
    case 1:
        return sym_lam("s", na, sym_star(x0, sym_var("s")));
    default:
        return sym_lam("s", na,
                       sym_star(sym_lam("t", na, sym_star(x0, sym_var("t"))),
                                sym_var("s")));
    }
}

SuiteResult suite_subst_closure(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "subst_closure";
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 31, i, opt.max_size));
        auto x1 = g.ctx.find("x1");
        if (!x1) {
            r.skipped++;
            continue;
        }
        SymTermPtr n = atom_inhabitant(i);
        SymTermPtr sub = substitute(g.term, "x0", n);
        auto rt = try_type_sym(g.ctx, sub);
        if (!rt || !type_eq(rt->type, g.type)) {
            fail(r, i, "substitution instance fails to typecheck");
            continue;
        }
        SNReport rep = longest_reduction_betapi(sub, opt.budget);
        if (rep.status == "normalizing")
            r.passed++;
        else
            fail(r, i, "longest-reduction search reported " + rep.status);
    }
    return r;
}

bool is_e_rule(SymRule r) { return r == SymRule::Eta || r == SymRule::EtaBot; }

bool is_b_rule(SymRule r) {
    return r == SymRule::Beta || r == SymRule::BetaBot || r == SymRule::Pi ||
           r == SymRule::PiBot;
}

// A postponement refusal counts as a confirmed counterexample only when the
// bounded exhaustive search agrees no exact reordering exists while one does
// exist up to star child order. Anything else is an implementation failure.
bool confirmed_refusal(const ReductionTrace& in, unsigned first_rules,
                       unsigned second_rules,
                       const std::optional<SymContext>& ctx) {
    try {
        if (search_reordering(in, first_rules, second_rules, false, ctx))
            return false;
        return search_reordering(in, first_rules, second_rules, true, ctx)
            .has_value();
    } catch (const Error&) {
        return false;
    }
}

void note_counterexample(SuiteResult& r, int sample) {
    r.counterexamples++;
    if (r.messages.size() < 5)
        r.messages.push_back("sample " + std::to_string(sample) +
                             ": counterexample: no exact reordering exists; "
                             "one exists up to star child order");
}

SuiteResult suite_postpone(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "postpone";
    int done = 0;
    int attempt = 0;
    while (done < opt.samples && attempt < opt.samples * 20 + 20) {
        int i = attempt++;
        std::mt19937_64 rng(opt.seed * 31 + 41 * 1000003ull +
                            static_cast<std::uint64_t>(i));
        // Prefer a start term that actually has an eta-family redex.
        GenSym g = gen_sym(sample_cfg(opt, 41, i, opt.max_size));
        for (int k = 1; k <= 3; k++) {
            if (!find_redexes(g.term, nullptr, kERules).empty()) break;
            g = gen_sym(sample_cfg(opt, 41, i + 7919 * k, opt.max_size));
        }
        ReductionTrace in;
        in.start = g.term;
        in.status = "ok";
        SymTermPtr cur = g.term;
        int prefix = static_cast<int>(rng() % 4);
        for (int k = 0; k < prefix; k++) {
            auto occs = find_redexes(cur, nullptr, kERules);
            if (occs.empty()) break;
            auto occ = occs[rng() % occs.size()];
            cur = reduce_at(cur, occ);
            in.steps.push_back({occ, cur});
        }
        int body = 1 + static_cast<int>(rng() % 3);
        int taken = 0;
        for (int k = 0; k < body; k++) {
            auto occs = find_redexes(cur, nullptr, kBetaPiRules);
            if (occs.empty()) break;
            auto occ = occs[rng() % occs.size()];
            cur = reduce_at(cur, occ);
            in.steps.push_back({occ, cur});
            taken++;
        }
        if (taken == 0) continue;
        int sample = done++;
        bool bounded = true; // linear-beta segment: the length bound applies
        for (const auto& st : in.steps) {
            if (is_b_rule(st.occ.rule) &&
                !((st.occ.rule == SymRule::Beta ||
                   st.occ.rule == SymRule::BetaBot) &&
                  st.occ.linear))
                bounded = false;
        }
        try {
            ReductionTrace out = postpone_e(in);
            bool shape = !out.steps.empty();
            bool in_e = false;
            for (const auto& st : out.steps) {
                if (is_e_rule(st.occ.rule))
                    in_e = true;
                else if (!is_b_rule(st.occ.rule) || in_e)
                    shape = false;
            }
            if (out.steps.empty() || is_e_rule(out.steps.front().occ.rule))
                shape = false;
            if (!shape)
                fail(r, sample, "reordered trace is not computation-then-eta");
            else if (!alpha_eq(out.end(), in.end()))
                fail(r, sample, "reordered trace ends elsewhere");
            else if (bounded && out.length() > in.length())
                fail(r, sample, "reordering lengthened a linear segment");
            else
                r.passed++;
        } catch (const Error& e) {
            if (e.kind == Error::Kind::Structural &&
                confirmed_refusal(in, kBetaPiRules, kERules, std::nullopt))
                note_counterexample(r, sample);
            else
                fail(r, sample, std::string("reordering failed: ") + e.what());
        }
    }
    r.skipped += opt.samples - done;
    return r;
}

SuiteResult suite_postpone_triv(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "postpone_triv";
    int done = 0;
    int attempt = 0;
    while (done < opt.samples && attempt < opt.samples * 20 + 20) {
        int i = attempt++;
        std::mt19937_64 rng(opt.seed * 31 + 42 * 1000003ull +
                            static_cast<std::uint64_t>(i));
        GenConfig cfg = sample_cfg(opt, 42, i, opt.max_size);
        cfg.bottom_bias = 1.0; // pruning needs command-typed terms
        GenSym g = gen_sym(cfg);
        for (int k = 1; k <= 3; k++) {
            SymTypeResult ty = typecheck_sym(g.ctx, g.term);
            if (!find_redexes(g.term, ty.derivation, rule_bit(SymRule::Triv)).empty())
                break;
            GenConfig c2 = sample_cfg(opt, 42, i + 7919 * k, opt.max_size);
            c2.bottom_bias = 1.0;
            g = gen_sym(c2);
        }
        ReductionTrace in;
        in.start = g.term;
        in.status = "ok";
        SymTermPtr cur = g.term;
        int prefix = static_cast<int>(rng() % 4);
        for (int k = 0; k < prefix; k++) {
            auto ty = try_type_sym(g.ctx, cur);
            if (!ty) break;
            auto occs = find_redexes(cur, ty->derivation, rule_bit(SymRule::Triv));
            if (occs.empty()) break;
            auto occ = occs[rng() % occs.size()];
            cur = reduce_at(cur, occ);
            in.steps.push_back({occ, cur});
        }
        auto occs = find_redexes(cur, nullptr, kBetaPiEtaRules);
        if (occs.empty()) continue;
        int sample = done++;
        auto occ = occs[rng() % occs.size()];
        cur = reduce_at(cur, occ);
        in.steps.push_back({occ, cur});
        try {
            ReductionTrace out = postpone_triv(in, g.ctx);
            bool shape = !out.steps.empty() &&
                         out.steps.front().occ.rule != SymRule::Triv;
            bool seen_triv = false;
            for (const auto& st : out.steps) {
                if (st.occ.rule == SymRule::Triv)
                    seen_triv = true;
                else if (seen_triv)
                    shape = false;
            }
            if (!shape)
                fail(r, sample, "reordered trace is not step-then-pruning");
            else if (!alpha_eq(out.end(), in.end()))
                fail(r, sample, "reordered trace ends elsewhere");
            else
                r.passed++;
        } catch (const Error& e) {
            if (e.kind == Error::Kind::Structural &&
                confirmed_refusal(in, kBetaPiEtaRules, rule_bit(SymRule::Triv),
                                  g.ctx))
                note_counterexample(r, sample);
            else
                fail(r, sample, std::string("reordering failed: ") + e.what());
        }
    }
    r.skipped += opt.samples - done;
    return r;
}

SuiteResult suite_sim_e(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "sim_e";
    int done = 0;
    int terms = 0;
    while (done < opt.samples && terms < opt.samples * 20 + 20) {
        GenLmm g = gen_lmm(sample_cfg(opt, 51, terms++, opt.max_size));
        for (const auto& occ : find_redexes_lmm(g.term, kAllLmmRules)) {
            if (done >= opt.samples) break;
            int sample = done++;
            SimVerdict v = check_sim_e(g.seq, g.term, occ, opt.search_budget);
            if (!v.pass()) {
                fail(r, sample,
                     lmm_rule_name(occ.rule) + " at " + path_str(occ.path) + ": " +
                         v.message);
                continue;
            }
            bool admin = occ.rule == LmmRule::Cl1L || occ.rule == LmmRule::Cl1R ||
                         occ.rule == LmmRule::Cl2;
            if (admin ? v.method != "equiv"
                      : (!v.sym_trace || v.sym_trace->steps.empty())) {
                fail(r, sample, lmm_rule_name(occ.rule) + ": wrong evidence kind");
                continue;
            }
            r.passed++;
        }
    }
    r.skipped += opt.samples - done;
    return r;
}

SuiteResult suite_sim_f(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "sim_f";
    const unsigned rules = rule_bit(SymRule::Beta) | rule_bit(SymRule::BetaBot) |
                           rule_bit(SymRule::Pi);
    int done = 0;
    int terms = 0;
    while (done < opt.samples && terms < opt.samples * 20 + 20) {
        GenSym g = gen_sym(sample_cfg(opt, 52, terms++, opt.max_size));
        for (const auto& occ : find_redexes(g.term, nullptr, rules)) {
            if (done >= opt.samples) break;
            int sample = done++;
            size_t expect = 2;
            if (occ.rule == SymRule::Pi) {
                SymTermPtr red = subterm_at(g.term, occ.path);
                expect = red->b->side == 1 ? 4 : 3;
            }
            SimVerdict v = check_sim_f(g.ctx, g.term, occ, opt.search_budget);
            if (!v.pass()) {
                fail(r, sample,
                     sym_rule_name(occ.rule) + " at " + path_str(occ.path) + ": " +
                         v.message);
            } else if (v.method != "chain" || !v.lmm_trace ||
                       v.lmm_trace->length() != expect) {
                fail(r, sample,
                     sym_rule_name(occ.rule) + ": expected a planned " +
                         std::to_string(expect) + "-step trace");
            } else {
                r.passed++;
            }
        }
    }
    r.skipped += opt.samples - done;
    return r;
}

SuiteResult suite_roundtrip(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "roundtrip";
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 61, i, opt.max_size));
        int budget = 3 * cxty_term(g.term) + 10;
        if (roundtrip_fe(g.ctx, g.term, budget))
            r.passed++;
        else
            fail(r, i, "translated-and-back trace missing within budget " +
                           std::to_string(budget));
    }
    for (int i = 0; i < opt.samples; i++) {
        GenLmm g = gen_lmm(sample_cfg(opt, 62, i, opt.max_size));
        int budget = 3 * cxty_lmm(g.term) + 10;
        if (roundtrip_ef(g.seq, g.term, budget))
            r.passed++;
        else
            fail(r, i, "composite-image trace missing within budget " +
                           std::to_string(budget));
    }
    return r;
}

SuiteResult suite_transport(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "transport";
    for (int i = 0; i < opt.samples; i++) {
        GenLmm g = gen_lmm(sample_cfg(opt, 71, i, opt.max_size));
        std::optional<LmmTypePtr> src = typecheck_lmm(g.seq, g.term);
        SymTermPtr img = term_e(g.seq, g.term);
        auto ty = try_type_sym(context_e(g.seq), img);
        // l-terms of type A land at A's image, r-terms at its negation,
        // commands at bottom.
        SymTypePtr want;
        if (src)
            want = lmm_sort(g.term) == LmmSort::L ? type_e(*src)
                                                  : neg_type(type_e(*src));
        else
            want = sym_bottom();
        if (!ty)
            fail(r, i, "image term does not typecheck");
        else if (type_eq(ty->type, want))
            r.passed++;
        else
            fail(r, i, "image term has the wrong type");
    }
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 72, i, opt.max_size));
        LmmTermPtr img = term_f(g.ctx, g.term);
        auto ty = try_type_lmm(context_f(g.ctx), img);
        if (!ty) {
            fail(r, i, "image term does not typecheck");
        } else if (g.type->kind == SymType::Kind::Bottom
                       ? !ty->has_value()
                       : (ty->has_value() && lmm_type_eq(**ty, type_f(g.type)))) {
            r.passed++;
        } else {
            fail(r, i, "image term has the wrong type");
        }
    }
    return r;
}

SuiteResult suite_subformula(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "subformula";
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 81, i, opt.max_size));
        SymTypeResult ty = typecheck_sym(g.ctx, g.term);
        ReductionTrace tr = normalize(g.term, ty.derivation,
                                      SymStrategy::LeftmostOutermost, opt.fuel);
        if (tr.status != "normal-form") {
            fail(r, i, "normalization did not finish: " + tr.status);
            continue;
        }
        auto nf = try_type_sym(g.ctx, tr.end());
        if (!nf) {
            fail(r, i, "normal form does not typecheck");
        } else if (subformula_report(nf->derivation)) {
            r.passed++;
        } else {
            fail(r, i, "derivation of the normal form leaves the subformula bound");
        }
    }
    return r;
}

SuiteResult suite_nonconfluence(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "nonconfluence";
    if (opt.samples <= 0) return r;
    LmmSequent seq;
    LmmTypePtr a = lmm_atom("a");
    seq.bind_l("x", a);
    seq.bind_l("y", a);
    seq.bind_r("al", a);
    seq.bind_r("be", a);
    LmmTermPtr u = lmm_cut(lmm_mu("g", a, lmm_cut(lmm_lvar("x"), lmm_rvar("al"))),
                           lmm_mut("z", a, lmm_cut(lmm_lvar("y"), lmm_rvar("be"))));
    auto occs = find_redexes_lmm(u, kAllLmmRules);
    bool has_mu = false, has_mut = false;
    for (const auto& o : occs) {
        if (o.path.empty() && o.rule == LmmRule::Mu) has_mu = true;
        if (o.path.empty() && o.rule == LmmRule::MuTilde) has_mut = true;
    }
    if (!has_mu || !has_mut) {
        fail(r, 0, "critical pair does not expose both overlapping rules");
        return r;
    }
    LmmTrace t1 = normalize_lmm(u, LmmStrategy::LeftmostOutermost, opt.fuel,
                                kAllLmmRules, MuOverlap::PriorityMu);
    LmmTrace t2 = normalize_lmm(u, LmmStrategy::LeftmostOutermost, opt.fuel,
                                kAllLmmRules, MuOverlap::PriorityMuTilde);
    LmmTermPtr w1 = lmm_cut(lmm_lvar("x"), lmm_rvar("al"));
    LmmTermPtr w2 = lmm_cut(lmm_lvar("y"), lmm_rvar("be"));
    if (t1.status != "normal-form" || t2.status != "normal-form")
        fail(r, 0, "critical pair did not normalize");
    else if (!alpha_eq_lmm(t1.end(), w1) || !alpha_eq_lmm(t2.end(), w2))
        fail(r, 0, "critical pair reduced to unexpected normal forms");
    else if (alpha_eq_lmm(t1.end(), t2.end()))
        fail(r, 0, "the two priorities agree; no divergence observed");
    else
        r.passed++;
    return r;
}

SuiteResult suite_monotonicity(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "monotonicity";
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 91, i, opt.max_size));
        SNReport base = longest_reduction_betapi(g.term, opt.budget);
        if (base.status != "normalizing" || !base.eta) {
            fail(r, i, "longest-reduction search reported " + base.status);
            continue;
        }
        bool ok = true;
        for (const auto& occ : find_redexes(g.term, nullptr, kBetaPiRules)) {
            SNReport next =
                longest_reduction_betapi(reduce_at(g.term, occ), opt.budget);
            if (next.status != "normalizing" || !next.eta ||
                *base.eta < *next.eta + 1) {
                ok = false;
                fail(r, i, sym_rule_name(occ.rule) + " at " + path_str(occ.path) +
                               " does not shrink the measure");
                break;
            }
        }
        if (ok) r.passed++;
    }
    return r;
}

SuiteResult suite_subst_lemmas(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "subst_lemmas";
    for (int i = 0; i < opt.samples; i++) {
        GenSym g = gen_sym(sample_cfg(opt, 95, i, opt.max_size));
        if (!g.ctx.find("x1")) {
            r.skipped++;
        } else if (subst_commutes_f(g.ctx, g.term, "x0", atom_inhabitant(i))) {
            r.passed++;
        } else {
            fail(r, i, "value translation does not commute with substitution");
        }
    }
    for (int i = 0; i < opt.samples; i++) {
        GenLmm g = gen_lmm(sample_cfg(opt, 96, i, opt.max_size));
        auto t0 = g.seq.find_l("x0");
        auto a0 = g.seq.find_r("a0");
        if (!t0 || !a0) {
            r.skipped += 2;
            continue;
        }
        LmmTermPtr probe_l =
            i % 2 == 0 ? lmm_lvar("x0")
                       : lmm_mu("sb", *t0,
                                lmm_cut(lmm_lvar("x0"), lmm_rvar("a0")));
        LmmTermPtr probe_r =
            i % 2 == 0 ? lmm_rvar("a0")
                       : lmm_mut("sb", *a0,
                                 lmm_cut(lmm_lvar("x0"), lmm_rvar("a0")));
        if (subst_commutes_e_l(g.seq, g.term, "x0", probe_l))
            r.passed++;
        else
            fail(r, i, "term substitution does not commute with the translation");
        if (subst_commutes_e_r(g.seq, g.term, "a0", probe_r))
            r.passed++;
        else
            fail(r, i,
                 "covariable substitution does not commute with the translation");
    }
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "preservation", "sn",        "subst_closure", "postpone",
        "postpone_triv", "sim_e",    "sim_f",         "roundtrip",
        "transport",    "subformula", "nonconfluence", "monotonicity",
        "subst_lemmas"};
    return names;
}

SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (opt.samples < 0) usage_error("samples must be nonnegative");
    if (suite == "preservation") return suite_preservation(opt);
    if (suite == "sn") return suite_sn(opt);
    if (suite == "subst_closure") return suite_subst_closure(opt);
    if (suite == "postpone") return suite_postpone(opt);
    if (suite == "postpone_triv") return suite_postpone_triv(opt);
    if (suite == "sim_e") return suite_sim_e(opt);
    if (suite == "sim_f") return suite_sim_f(opt);
    if (suite == "roundtrip") return suite_roundtrip(opt);
    if (suite == "transport") return suite_transport(opt);
    if (suite == "subformula") return suite_subformula(opt);
    if (suite == "nonconfluence") return suite_nonconfluence(opt);
    if (suite == "monotonicity") return suite_monotonicity(opt);
    if (suite == "subst_lemmas") return suite_subst_lemmas(opt);
    usage_error("unknown suite: " + suite);
}

} // namespace symlog
