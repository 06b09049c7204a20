#include "symlog/lmm_reduce.hpp"

#include "symlog/error.hpp"

#include <random>
#include <tuple>

namespace symlog {

std::string lmm_rule_name(LmmRule r) {
    switch (r) {
    case LmmRule::Lambda: return "lambda";
    case LmmRule::Mu: return "mu";
    case LmmRule::MuTilde: return "mutilde";
    case LmmRule::SL: return "s_l";
    case LmmRule::SR: return "s_r";
    case LmmRule::Cl1L: return "cl1l";
    case LmmRule::Cl1R: return "cl1r";
    case LmmRule::Cl2: return "cl2";
    }
    return "?";
}

std::optional<LmmRule> lmm_rule_from_name(const std::string& s) {
    for (LmmRule r : {LmmRule::Lambda, LmmRule::Mu, LmmRule::MuTilde, LmmRule::SL,
                      LmmRule::SR, LmmRule::Cl1L, LmmRule::Cl1R, LmmRule::Cl2})
        if (lmm_rule_name(r) == s)
            return r;
    return std::nullopt;
}

std::optional<LmmStrategy> lmm_strategy_from_name(const std::string& s) {
    if (s == "lo" || s == "leftmost-outermost")
        return LmmStrategy::LeftmostOutermost;
    if (s == "ri" || s == "rightmost-innermost")
        return LmmStrategy::RightmostInnermost;
    if (s == "random" || s == "seeded-random")
        return LmmStrategy::SeededRandom;
    return std::nullopt;
}

std::optional<MuOverlap> mu_overlap_from_name(const std::string& s) {
    if (s == "mu" || s == "priority-mu")
        return MuOverlap::PriorityMu;
    if (s == "mutilde" || s == "priority-mutilde")
        return MuOverlap::PriorityMuTilde;
    return std::nullopt;
}

namespace {

using K = LmmTerm::Kind;

void match_at(const LmmTermPtr& u, const Path& here, unsigned rules,
              std::vector<LmmRedexOccurrence>& out) {
    auto want = [&](LmmRule r) { return (rules & lmm_rule_bit(r)) != 0; };
    switch (u->kind) {
    case K::Cut:
        if (want(LmmRule::Lambda) && u->a->kind == K::Lam && u->b->kind == K::Cons)
            out.push_back({here, LmmRule::Lambda});
        if (want(LmmRule::Mu) && u->a->kind == K::Mu)
            out.push_back({here, LmmRule::Mu});
        if (want(LmmRule::MuTilde) && u->b->kind == K::MuTilde)
            out.push_back({here, LmmRule::MuTilde});
        if (want(LmmRule::Cl2) && u->a->kind == K::BarE && u->b->kind == K::TildeT)
            out.push_back({here, LmmRule::Cl2});
        break;
    case K::Mu:
        if (want(LmmRule::SL) && u->a->kind == K::Cut && u->a->b->kind == K::RVar &&
            u->a->b->name == u->name && count_free_r(u->a->a, u->name) == 0)
            out.push_back({here, LmmRule::SL});
        break;
    case K::MuTilde:
        if (want(LmmRule::SR) && u->a->kind == K::Cut && u->a->a->kind == K::LVar &&
            u->a->a->name == u->name && count_free_l(u->a->b, u->name) == 0)
            out.push_back({here, LmmRule::SR});
        break;
    case K::BarE:
        if (want(LmmRule::Cl1L) && u->a->kind == K::TildeT)
            out.push_back({here, LmmRule::Cl1L});
        break;
    case K::TildeT:
        if (want(LmmRule::Cl1R) && u->a->kind == K::BarE)
            out.push_back({here, LmmRule::Cl1R});
        break;
    default:
        break;
    }
}

} // namespace

std::vector<LmmRedexOccurrence> find_redexes_lmm(const LmmTermPtr& u, unsigned rules) {
    if (!u)
        structural_error("null term");
    std::vector<LmmRedexOccurrence> out;
    Path here;
    auto walk = [&](auto&& self, const LmmTermPtr& t) -> void {
        match_at(t, here, rules, out);
        int n = child_count_lmm(t);
        for (int i = 0; i < n; i++) {
            here.push_back(i);
            self(self, child_at_lmm(t, i));
            here.pop_back();
        }
    };
    walk(walk, u);
    return out;
}

LmmTermPtr reduce_at_lmm(const LmmTermPtr& u, const LmmRedexOccurrence& occ) {
    LmmTermPtr t = subterm_at_lmm(u, occ.path);
    LmmTermPtr contractum;
    switch (occ.rule) {
    case LmmRule::Lambda: {
        if (t->kind != K::Cut || t->a->kind != K::Lam || t->b->kind != K::Cons)
            structural_error("stale lambda occurrence");
        LmmTermPtr lam = t->a;
        LmmTermPtr head = t->b->a;
        LmmTermPtr tail = t->b->b;
        std::string x = lam->name;
        LmmTermPtr body = lam->a;
        // The tail moves under the binder: rename if it mentions x freely.
        if (fv_l(tail).count(x)) {
            std::set<std::string> avoid = fv_l(tail);
            auto bl = fv_l(body);
            avoid.insert(bl.begin(), bl.end());
            avoid.insert(x);
            std::string fx = fresh_name(avoid);
            body = subst_l(body, x, lmm_lvar(fx));
            x = fx;
        }
        contractum = lmm_cut(head, lmm_mut(x, lam->ann, lmm_cut(body, tail)));
        break;
    }
    case LmmRule::Mu:
        if (t->kind != K::Cut || t->a->kind != K::Mu)
            structural_error("stale mu occurrence");
        contractum = subst_r(t->a->a, t->a->name, t->b);
        break;
    case LmmRule::MuTilde:
        if (t->kind != K::Cut || t->b->kind != K::MuTilde)
            structural_error("stale mutilde occurrence");
        contractum = subst_l(t->b->a, t->b->name, t->a);
        break;
    case LmmRule::SL:
        if (t->kind != K::Mu || t->a->kind != K::Cut || t->a->b->kind != K::RVar ||
            t->a->b->name != t->name || count_free_r(t->a->a, t->name) != 0)
            structural_error("stale s_l occurrence");
        contractum = t->a->a;
        break;
    case LmmRule::SR:
        if (t->kind != K::MuTilde || t->a->kind != K::Cut || t->a->a->kind != K::LVar ||
            t->a->a->name != t->name || count_free_l(t->a->b, t->name) != 0)
            structural_error("stale s_r occurrence");
        contractum = t->a->b;
        break;
    case LmmRule::Cl1L:
        if (t->kind != K::BarE || t->a->kind != K::TildeT)
            structural_error("stale cl1l occurrence");
        contractum = t->a->a;
        break;
    case LmmRule::Cl1R:
        if (t->kind != K::TildeT || t->a->kind != K::BarE)
            structural_error("stale cl1r occurrence");
        contractum = t->a->a;
        break;
    case LmmRule::Cl2:
        if (t->kind != K::Cut || t->a->kind != K::BarE || t->b->kind != K::TildeT)
            structural_error("stale cl2 occurrence");
        contractum = lmm_cut(t->b->a, t->a->a);
        break;
    }
    return replace_at_lmm(u, occ.path, contractum);
}

namespace {

bool path_less(const Path& a, const Path& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int rule_rank(LmmRule r, MuOverlap overlap) {
    int base = static_cast<int>(r);
    if (overlap == MuOverlap::PriorityMuTilde) {
        if (r == LmmRule::Mu)
            return static_cast<int>(LmmRule::MuTilde);
        if (r == LmmRule::MuTilde)
            return static_cast<int>(LmmRule::Mu);
    }
    return base;
}

size_t select_occurrence(const std::vector<LmmRedexOccurrence>& occs,
                         LmmStrategy strat, MuOverlap overlap, std::mt19937_64& rng) {
    if (strat == LmmStrategy::SeededRandom)
        return static_cast<size_t>(rng() % occs.size());
    size_t best = 0;
    for (size_t i = 1; i < occs.size(); i++) {
        const auto& a = occs[i];
        const auto& b = occs[best];
        bool better;
        if (strat == LmmStrategy::LeftmostOutermost) {
            better = a.path != b.path ? a.path < b.path
                                      : rule_rank(a.rule, overlap) <
                                            rule_rank(b.rule, overlap);
        } else {
            better = a.path != b.path ? path_less(b.path, a.path)
                                      : rule_rank(a.rule, overlap) <
                                            rule_rank(b.rule, overlap);
        }
        if (better)
            best = i;
    }
    return best;
}

} // namespace

LmmTrace normalize_lmm(const LmmTermPtr& u, LmmStrategy strategy, long long fuel,
                       unsigned rules, MuOverlap overlap, std::uint64_t seed) {
    if (fuel <= 0)
        usage_error("fuel must be positive");
    LmmTrace trace;
    trace.start = u;
    LmmTermPtr cur = u;
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < fuel; i++) {
        auto occs = find_redexes_lmm(cur, rules);
        if (occs.empty()) {
            trace.status = "normal-form";
            return trace;
        }
        size_t pick = select_occurrence(occs, strategy, overlap, rng);
        cur = reduce_at_lmm(cur, occs[pick]);
        trace.steps.push_back({occs[pick], cur});
    }
    trace.status = find_redexes_lmm(cur, rules).empty() ? "normal-form" : "fuel-exhausted";
    return trace;
}

} // namespace symlog
