#include "symlog/sym_reduce.hpp"

#include "symlog/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace symlog {

std::string sym_rule_name(SymRule r) {
    switch (r) {
    case SymRule::Beta: return "beta";
    case SymRule::BetaBot: return "beta_bot";
    case SymRule::Eta: return "eta";
    case SymRule::EtaBot: return "eta_bot";
    case SymRule::Pi: return "pi";
    case SymRule::PiBot: return "pi_bot";
    case SymRule::Triv: return "triv";
    }
    return "?";
}

std::optional<SymRule> sym_rule_from_name(const std::string& s) {
    for (SymRule r : {SymRule::Beta, SymRule::BetaBot, SymRule::Eta, SymRule::EtaBot,
                      SymRule::Pi, SymRule::PiBot, SymRule::Triv})
        if (sym_rule_name(r) == s)
            return r;
    return std::nullopt;
}

std::optional<SymStrategy> sym_strategy_from_name(const std::string& s) {
    if (s == "lo" || s == "leftmost-outermost")
        return SymStrategy::LeftmostOutermost;
    if (s == "ri" || s == "rightmost-innermost")
        return SymStrategy::RightmostInnermost;
    if (s == "random" || s == "seeded-random")
        return SymStrategy::SeededRandom;
    return std::nullopt;
}

namespace {

bool is_lam(const SymTermPtr& t) { return t->kind == SymTerm::Kind::Lam; }
bool is_pair(const SymTermPtr& t) { return t->kind == SymTerm::Kind::Pair; }
bool is_inj(const SymTermPtr& t) { return t->kind == SymTerm::Kind::Inj; }
bool is_var(const SymTermPtr& t) { return t->kind == SymTerm::Kind::Var; }
bool is_star(const SymTermPtr& t) { return t->kind == SymTerm::Kind::Star; }

// Positions whose node has type # in the typed term, in preorder. The
// derivation mirrors the term's shape (premise order follows child order),
// so walking both in lockstep recovers a position-to-type table.
void bottom_positions(const SymTermPtr& t, const SymDerivationPtr& d, Path& here,
                      std::vector<Path>& out) {
    if (d->type->kind == SymType::Kind::Bottom)
        out.push_back(here);
    int n = child_count(t);
    for (int i = 0; i < n; i++) {
        here.push_back(i);
        bottom_positions(child_at(t, i), d->premises[static_cast<size_t>(i)], here, out);
        here.pop_back();
    }
}

bool is_prefix(const Path& p, const Path& q) {
    if (p.size() > q.size())
        return false;
    return std::equal(p.begin(), p.end(), q.begin());
}

// Lam binders at proper prefixes of the hole path, i.e. the binders the
// discarded context places above the survivor.
bool triv_side_condition(const SymTermPtr& e_node, const Path& keep) {
    SymTermPtr survivor = subterm_at(e_node, keep);
    auto fv = free_vars(survivor);
    SymTermPtr cur = e_node;
    for (int i : keep) {
        if (cur->kind == SymTerm::Kind::Lam && fv.count(cur->name))
            return false;
        cur = child_at(cur, i);
    }
    return true;
}

void match_at(const SymTermPtr& t, const Path& here, unsigned rules,
              std::vector<RedexOccurrence>& out) {
    auto want = [&](SymRule r) { return (rules & rule_bit(r)) != 0; };
    if (is_star(t)) {
        if (want(SymRule::Beta) && is_lam(t->a))
            out.push_back({here, SymRule::Beta, {}, count_free(t->a->a, t->a->name) <= 1});
        if (want(SymRule::BetaBot) && is_lam(t->b))
            out.push_back({here, SymRule::BetaBot, {}, count_free(t->b->a, t->b->name) <= 1});
        if (want(SymRule::Pi) && is_pair(t->a) && is_inj(t->b))
            out.push_back({here, SymRule::Pi, {}, false});
        if (want(SymRule::PiBot) && is_inj(t->a) && is_pair(t->b))
            out.push_back({here, SymRule::PiBot, {}, false});
    } else if (is_lam(t) && is_star(t->a)) {
        if (want(SymRule::Eta) && is_var(t->a->b) && t->a->b->name == t->name &&
            count_free(t->a->a, t->name) == 0)
            out.push_back({here, SymRule::Eta, {}, false});
        if (want(SymRule::EtaBot) && is_var(t->a->a) && t->a->a->name == t->name &&
            count_free(t->a->b, t->name) == 0)
            out.push_back({here, SymRule::EtaBot, {}, false});
    }
}

} // namespace

std::vector<RedexOccurrence> find_redexes(const SymTermPtr& m,
                                          const SymDerivationPtr& typing,
                                          unsigned rules) {
    if (!m)
        structural_error("null term");
    bool want_triv = (rules & rule_bit(SymRule::Triv)) != 0;
    if (want_triv && !typing)
        usage_error("triv occurrences require a typing derivation");

    // Triv occurrences grouped by enclosing position, filled in first so the
    // preorder walk can emit them in rule order at each node.
    std::map<Path, std::vector<Path>> triv_at;
    if (want_triv) {
        std::vector<Path> bots;
        Path here;
        bottom_positions(m, typing, here, bots);
        for (const auto& p : bots) {
            for (const auto& d : bots) {
                if (d.size() <= p.size() || !is_prefix(p, d))
                    continue;
                Path keep(d.begin() + static_cast<long>(p.size()), d.end());
                if (triv_side_condition(subterm_at(m, p), keep))
                    triv_at[p].push_back(keep);
            }
        }
        for (auto& [p, keeps] : triv_at)
            std::sort(keeps.begin(), keeps.end());
    }

    std::vector<RedexOccurrence> out;
    Path here;
    // Preorder walk gives leftmost-outermost order directly.
    auto walk = [&](auto&& self, const SymTermPtr& t) -> void {
        match_at(t, here, rules, out);
        if (want_triv) {
            auto it = triv_at.find(here);
            if (it != triv_at.end())
                for (const auto& k : it->second)
                    out.push_back({here, SymRule::Triv, k, false});
        }
        int n = child_count(t);
        for (int i = 0; i < n; i++) {
            here.push_back(i);
            self(self, child_at(t, i));
            here.pop_back();
        }
    };
    walk(walk, m);
    return out;
}

SymTermPtr reduce_at(const SymTermPtr& m, const RedexOccurrence& occ) {
    SymTermPtr t = subterm_at(m, occ.path);
    SymTermPtr contractum;
    switch (occ.rule) {
    case SymRule::Beta:
        if (!is_star(t) || !is_lam(t->a))
            structural_error("stale beta occurrence");
        contractum = substitute(t->a->a, t->a->name, t->b);
        break;
    case SymRule::BetaBot:
        if (!is_star(t) || !is_lam(t->b))
            structural_error("stale beta_bot occurrence");
        contractum = substitute(t->b->a, t->b->name, t->a);
        break;
    case SymRule::Eta:
        if (!is_lam(t) || !is_star(t->a) || !is_var(t->a->b) ||
            t->a->b->name != t->name || count_free(t->a->a, t->name) != 0)
            structural_error("stale eta occurrence");
        contractum = t->a->a;
        break;
    case SymRule::EtaBot:
        if (!is_lam(t) || !is_star(t->a) || !is_var(t->a->a) ||
            t->a->a->name != t->name || count_free(t->a->b, t->name) != 0)
            structural_error("stale eta_bot occurrence");
        contractum = t->a->b;
        break;
    case SymRule::Pi:
        if (!is_star(t) || !is_pair(t->a) || !is_inj(t->b))
            structural_error("stale pi occurrence");
        contractum = sym_star(t->b->side == 1 ? t->a->a : t->a->b, t->b->a);
        break;
    case SymRule::PiBot:
        if (!is_star(t) || !is_inj(t->a) || !is_pair(t->b))
            structural_error("stale pi_bot occurrence");
        contractum = sym_star(t->a->a, t->a->side == 1 ? t->b->a : t->b->b);
        break;
    case SymRule::Triv: {
        if (occ.keep.empty())
            structural_error("triv occurrence must discard a nonempty context");
        if (!is_star(t))
            structural_error("stale triv occurrence: enclosing term is not a star");
        SymTermPtr survivor = subterm_at(t, occ.keep);
        if (!is_star(survivor))
            structural_error("stale triv occurrence: survivor is not a star");
        if (!triv_side_condition(t, occ.keep))
            structural_error("stale triv occurrence: discarded context binds the survivor");
        contractum = survivor;
        break;
    }
    }
    return replace_at(m, occ.path, contractum);
}

namespace {

// Path order where an extension is deeper (innermost) than its prefix.
bool path_less_inner(const Path& a, const Path& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

size_t select_occurrence(const std::vector<RedexOccurrence>& occs, SymStrategy strat,
                         std::mt19937_64& rng) {
    if (strat == SymStrategy::SeededRandom)
        return static_cast<size_t>(rng() % occs.size());
    size_t best = 0;
    for (size_t i = 1; i < occs.size(); i++) {
        const auto& a = occs[i];
        const auto& b = occs[best];
        bool better;
        if (strat == SymStrategy::LeftmostOutermost) {
            better = std::tie(a.path, a.rule, a.keep) < std::tie(b.path, b.rule, b.keep);
        } else {
            if (a.path != b.path)
                better = path_less_inner(b.path, a.path);
            else
                better = std::tie(a.rule, a.keep) < std::tie(b.rule, b.keep);
        }
        if (better)
            best = i;
    }
    return best;
}

} // namespace

ReductionTrace normalize(const SymTermPtr& m, const SymDerivationPtr& typing,
                         SymStrategy strategy, long long fuel, unsigned rules,
                         std::uint64_t seed) {
    if (fuel <= 0)
        usage_error("fuel must be positive");
    unsigned effective = rules;
    if (!typing)
        effective &= ~rule_bit(SymRule::Triv);

    ReductionTrace trace;
    trace.start = m;
    SymTermPtr cur = m;
    SymDerivationPtr deriv = typing;
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < fuel; i++) {
        auto occs = find_redexes(cur, deriv, effective);
        if (occs.empty()) {
            trace.status = "normal-form";
            return trace;
        }
        size_t pick = select_occurrence(occs, strategy, rng);
        cur = reduce_at(cur, occs[pick]);
        if (deriv)
            deriv = typecheck_sym(deriv->ctx, cur).derivation;
        trace.steps.push_back({occs[pick], cur});
    }
    if (find_redexes(cur, deriv, effective).empty())
        trace.status = "normal-form";
    else
        trace.status = "fuel-exhausted";
    return trace;
}

} // namespace symlog
