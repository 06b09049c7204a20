#include "symlog/sym_postpone.hpp"

#include "symlog/error.hpp"

#include <algorithm>
#include <deque>

namespace symlog {

namespace {

bool is_e_rule(SymRule r) { return r == SymRule::Eta || r == SymRule::EtaBot; }

bool is_b_rule(SymRule r) {
    return r == SymRule::Beta || r == SymRule::BetaBot || r == SymRule::Pi ||
           r == SymRule::PiBot;
}

bool is_prefix(const Path& p, const Path& q) {
    if (p.size() > q.size())
        return false;
    return std::equal(p.begin(), p.end(), q.begin());
}

Path concat(const Path& a, const Path& b) {
    Path out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Path concat3(const Path& a, const Path& b, const Path& c) {
    return concat(concat(a, b), c);
}

Path drop(const Path& p, size_t n) { return Path(p.begin() + static_cast<long>(n), p.end()); }

// Recomputes the linearity flag against the actual term so assembled traces
// carry accurate markings regardless of where the occurrence came from.
RedexOccurrence finalize_occ(const SymTermPtr& t, RedexOccurrence occ) {
    if (occ.rule == SymRule::Beta || occ.rule == SymRule::BetaBot) {
        SymTermPtr node = subterm_at(t, occ.path);
        SymTermPtr lam = occ.rule == SymRule::Beta ? node->a : node->b;
        occ.linear = count_free(lam->a, lam->name) <= 1;
    } else {
        occ.linear = false;
    }
    return occ;
}

ReductionTrace assemble(const SymTermPtr& start, const std::vector<RedexOccurrence>& occs) {
    ReductionTrace out;
    out.start = start;
    out.status = "ok";
    SymTermPtr cur = start;
    for (const auto& o : occs) {
        RedexOccurrence fo = finalize_occ(cur, o);
        cur = reduce_at(cur, fo);
        out.steps.push_back({fo, cur});
    }
    return out;
}

SymTermPtr replay_prefix(const SymTermPtr& start, const std::vector<RedexOccurrence>& occs,
                         size_t n) {
    SymTermPtr cur = start;
    for (size_t i = 0; i < n; i++)
        cur = reduce_at(cur, occs[i]);
    return cur;
}

struct SwapPlan {
    std::vector<RedexOccurrence> steps;
    bool star_swapped = false; // endpoint differs from the original by a star swap
};

// Commutation of one eta-family step followed by one computation step, both
// applied to t0. Case analysis on where the eta contractum sits relative to
// the computation redex; nullopt means no constructive commutation exists.
std::optional<SwapPlan> plan_swap_eb(const SymTermPtr& t0, const RedexOccurrence& e,
                                     const RedexOccurrence& b) {
    const Path& p = e.path;
    const Path& q = b.path;
    int sel = e.rule == SymRule::Eta ? 0 : 1;
    SwapPlan plan;

    if (!is_prefix(p, q) && !is_prefix(q, p)) {
        plan.steps = {{q, b.rule, {}, false}, {p, e.rule, {}, false}};
        return plan;
    }
    if (is_prefix(p, q)) {
        // The computation redex lives inside the eta contractum; in t0 that
        // subterm sits one pairing deeper, on the stripped side.
        Path r = drop(q, p.size());
        plan.steps = {{concat3(p, {0, sel}, r), b.rule, {}, false},
                      {p, e.rule, {}, false}};
        return plan;
    }

    // q is a strict prefix of p: the eta step happened inside the would-be
    // computation redex.
    Path s = drop(p, q.size());
    SymTermPtr node = subterm_at(t0, q);
    auto payload_copies = [&](const SymTermPtr& lam, const Path& r, SymRule brule) {
        std::vector<RedexOccurrence> out{{q, brule, {}, false}};
        for (const auto& pj : free_positions(lam->a, lam->name))
            out.push_back({concat3(q, pj, r), e.rule, {}, false});
        plan.steps = std::move(out);
        return plan;
    };
    auto two = [&](SymRule first, SymRule second, bool swapped) {
        plan.steps = {{q, first, {}, true}, {q, second, {}, false}};
        plan.star_swapped = swapped;
        return plan;
    };
    auto keep_one = [&](SymRule brule, Path at) {
        plan.steps = {{q, brule, {}, false}, {std::move(at), e.rule, {}, false}};
        return plan;
    };
    auto drop_e = [&](SymRule brule) {
        plan.steps = {{q, brule, {}, false}};
        return plan;
    };
    bool eta = e.rule == SymRule::Eta;

    switch (b.rule) {
    case SymRule::Beta:
        if (s == Path{0})
            // The eta redex occupies the function slot: contract the outer
            // binder first (necessarily linear), then the revealed redex.
            return two(SymRule::Beta, eta ? SymRule::Beta : SymRule::BetaBot, false);
        if (s.size() >= 2 && s[0] == 0 && s[1] == 0)
            return keep_one(SymRule::Beta, concat(q, drop(s, 2)));
        if (s[0] == 1) {
            if (node->kind != SymTerm::Kind::Star || node->a->kind != SymTerm::Kind::Lam)
                return std::nullopt;
            return payload_copies(node->a, drop(s, 1), SymRule::Beta);
        }
        return std::nullopt;
    case SymRule::BetaBot:
        if (s == Path{1})
            return two(SymRule::BetaBot, eta ? SymRule::Beta : SymRule::BetaBot, false);
        if (s.size() >= 2 && s[0] == 1 && s[1] == 0)
            return keep_one(SymRule::BetaBot, concat(q, drop(s, 2)));
        if (s[0] == 0) {
            if (node->kind != SymTerm::Kind::Star || node->b->kind != SymTerm::Kind::Lam)
                return std::nullopt;
            return payload_copies(node->b, drop(s, 1), SymRule::BetaBot);
        }
        return std::nullopt;
    case SymRule::Pi: {
        if (s == Path{0})
            return two(SymRule::Beta, eta ? SymRule::Pi : SymRule::PiBot, !eta);
        if (s == Path{1})
            return two(SymRule::BetaBot, eta ? SymRule::PiBot : SymRule::Pi, eta);
        if (node->kind != SymTerm::Kind::Star || node->b->kind != SymTerm::Kind::Inj)
            return std::nullopt;
        int side = node->b->side;
        if (s.size() >= 2 && s[0] == 0) {
            if (s[1] + 1 == side)
                return keep_one(SymRule::Pi, concat3(q, {0}, drop(s, 2)));
            return drop_e(SymRule::Pi);
        }
        if (s.size() >= 2 && s[0] == 1 && s[1] == 0)
            return keep_one(SymRule::Pi, concat3(q, {1}, drop(s, 2)));
        return std::nullopt;
    }
    case SymRule::PiBot: {
        if (s == Path{0})
            return two(SymRule::Beta, eta ? SymRule::PiBot : SymRule::Pi, !eta);
        if (s == Path{1})
            return two(SymRule::BetaBot, eta ? SymRule::Pi : SymRule::PiBot, eta);
        if (node->kind != SymTerm::Kind::Star || node->a->kind != SymTerm::Kind::Inj)
            return std::nullopt;
        int side = node->a->side;
        if (s.size() >= 2 && s[0] == 0 && s[1] == 0)
            return keep_one(SymRule::PiBot, concat3(q, {0}, drop(s, 2)));
        if (s.size() >= 2 && s[0] == 1) {
            if (s[1] + 1 == side)
                return keep_one(SymRule::PiBot, concat3(q, {1}, drop(s, 2)));
            return drop_e(SymRule::PiBot);
        }
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

// Commutation of one triv step followed by one computation or eta step.
std::optional<SwapPlan> plan_swap_tb(const SymTermPtr& t0, const RedexOccurrence& tv,
                                     const RedexOccurrence& b) {
    const Path& pt = tv.path;
    const Path& kt = tv.keep;
    const Path& q = b.path;
    SwapPlan plan;

    if (!is_prefix(pt, q) && !is_prefix(q, pt)) {
        plan.steps = {{q, b.rule, {}, false}, {pt, SymRule::Triv, kt, false}};
        return plan;
    }
    if (is_prefix(pt, q)) {
        // The step fires inside the survivor; in t0 the survivor still sits
        // under the discarded context.
        Path r = drop(q, pt.size());
        plan.steps = {{concat3(pt, kt, r), b.rule, {}, false},
                      {pt, SymRule::Triv, kt, false}};
        return plan;
    }

    Path s = drop(pt, q.size());
    SymTermPtr node = subterm_at(t0, q);
    auto keep_one = [&](SymRule brule, Path at) {
        plan.steps = {{q, brule, {}, false}, {std::move(at), SymRule::Triv, kt, false}};
        return plan;
    };
    auto drop_tv = [&](SymRule brule) {
        plan.steps = {{q, brule, {}, false}};
        return plan;
    };

    switch (b.rule) {
    case SymRule::Beta:
        if (s.size() >= 2 && s[0] == 0 && s[1] == 0)
            return keep_one(SymRule::Beta, concat(q, drop(s, 2)));
        if (s.size() >= 1 && s[0] == 1) {
            if (node->kind != SymTerm::Kind::Star || node->a->kind != SymTerm::Kind::Lam)
                return std::nullopt;
            std::vector<RedexOccurrence> out{{q, SymRule::Beta, {}, false}};
            for (const auto& pj : free_positions(node->a->a, node->a->name))
                out.push_back({concat3(q, pj, drop(s, 1)), SymRule::Triv, kt, false});
            plan.steps = std::move(out);
            return plan;
        }
        return std::nullopt;
    case SymRule::BetaBot:
        if (s.size() >= 2 && s[0] == 1 && s[1] == 0)
            return keep_one(SymRule::BetaBot, concat(q, drop(s, 2)));
        if (s.size() >= 1 && s[0] == 0) {
            if (node->kind != SymTerm::Kind::Star || node->b->kind != SymTerm::Kind::Lam)
                return std::nullopt;
            std::vector<RedexOccurrence> out{{q, SymRule::BetaBot, {}, false}};
            for (const auto& pj : free_positions(node->b->a, node->b->name))
                out.push_back({concat3(q, pj, drop(s, 1)), SymRule::Triv, kt, false});
            plan.steps = std::move(out);
            return plan;
        }
        return std::nullopt;
    case SymRule::Pi: {
        if (node->kind != SymTerm::Kind::Star || node->b->kind != SymTerm::Kind::Inj)
            return std::nullopt;
        int side = node->b->side;
        if (s.size() >= 2 && s[0] == 0) {
            if (s[1] + 1 == side)
                return keep_one(SymRule::Pi, concat3(q, {0}, drop(s, 2)));
            return drop_tv(SymRule::Pi);
        }
        if (s.size() >= 2 && s[0] == 1 && s[1] == 0)
            return keep_one(SymRule::Pi, concat3(q, {1}, drop(s, 2)));
        return std::nullopt;
    }
    case SymRule::PiBot: {
        if (node->kind != SymTerm::Kind::Star || node->a->kind != SymTerm::Kind::Inj)
            return std::nullopt;
        int side = node->a->side;
        if (s.size() >= 2 && s[0] == 0 && s[1] == 0)
            return keep_one(SymRule::PiBot, concat3(q, {0}, drop(s, 2)));
        if (s.size() >= 2 && s[0] == 1) {
            if (s[1] + 1 == side)
                return keep_one(SymRule::PiBot, concat3(q, {1}, drop(s, 2)));
            return drop_tv(SymRule::PiBot);
        }
        return std::nullopt;
    }
    case SymRule::Eta:
        // s == [0] exactly means the triv step revealed the eta redex: no
        // commutation exists in general.
        if (s.size() >= 2 && s[0] == 0 && s[1] == 0)
            return keep_one(SymRule::Eta, concat(q, drop(s, 2)));
        return std::nullopt;
    case SymRule::EtaBot:
        if (s.size() >= 2 && s[0] == 0 && s[1] == 1)
            return keep_one(SymRule::EtaBot, concat(q, drop(s, 2)));
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

// Breadth-first reordering search: a nonempty phase of `first` rules, then a
// phase of `second` rules, reaching the target up to renaming. The context
// enables triv enumeration in the second phase.
std::optional<std::vector<RedexOccurrence>>
bfs_reorder(const SymTermPtr& start, const SymTermPtr& target, size_t max_depth,
            unsigned first_rules, unsigned second_rules,
            const std::optional<SymContext>& ctx, bool loose = false) {
    struct Node {
        SymTermPtr term;
        int phase;
        bool has_first;
        int parent;
        RedexOccurrence via;
    };
    const size_t kNodeCap = 200000;
    std::vector<Node> nodes;
    nodes.push_back({start, 0, false, -1, {}});
    std::set<std::string> seen{canon_key(start) + "|0|0"};
    std::deque<std::pair<int, size_t>> frontier{{0, 0}};

    auto occs_for = [&](const SymTermPtr& t, unsigned rules) {
        SymDerivationPtr d;
        if ((rules & rule_bit(SymRule::Triv)) != 0) {
            if (!ctx)
                rules &= ~rule_bit(SymRule::Triv);
            else {
                auto r = try_type_sym(*ctx, t);
                if (r)
                    d = r->derivation;
                else
                    rules &= ~rule_bit(SymRule::Triv);
            }
        }
        return find_redexes(t, d, rules);
    };

    while (!frontier.empty()) {
        auto [idx, depth] = frontier.front();
        frontier.pop_front();
        Node cur = nodes[static_cast<size_t>(idx)];
        if (cur.has_first &&
            (loose ? sym_equiv(cur.term, target) : alpha_eq(cur.term, target))) {
            std::vector<RedexOccurrence> out;
            int i = idx;
            while (i > 0) {
                out.push_back(nodes[static_cast<size_t>(i)].via);
                i = nodes[static_cast<size_t>(i)].parent;
            }
            std::reverse(out.begin(), out.end());
            return out;
        }
        if (depth >= max_depth)
            continue;
        auto expand = [&](const RedexOccurrence& o, int phase) {
            SymTermPtr nxt = reduce_at(cur.term, o);
            bool hf = cur.has_first || phase == 0;
            std::string key = canon_key(nxt) + "|" + std::to_string(phase) + "|" +
                              (hf ? "1" : "0");
            if (seen.count(key) || nodes.size() >= kNodeCap)
                return;
            seen.insert(key);
            nodes.push_back({nxt, phase, hf, idx, o});
            frontier.push_back({static_cast<int>(nodes.size()) - 1, depth + 1});
        };
        if (cur.phase == 0) {
            for (const auto& o : occs_for(cur.term, first_rules))
                expand(o, 0);
            if (cur.has_first)
                for (const auto& o : occs_for(cur.term, second_rules))
                    expand(o, 1);
        } else {
            for (const auto& o : occs_for(cur.term, second_rules))
                expand(o, 1);
        }
        if (nodes.size() >= kNodeCap)
            break;
    }
    return std::nullopt;
}

std::vector<RedexOccurrence>
replayed_occurrences(const ReductionTrace& trace, bool* all_linear_out) {
    std::vector<RedexOccurrence> seq;
    SymTermPtr cur = trace.start;
    bool all_linear = true;
    for (const auto& st : trace.steps) {
        RedexOccurrence occ = finalize_occ(cur, st.occ);
        SymTermPtr nxt;
        try {
            nxt = reduce_at(cur, occ);
        } catch (const Error&) {
            usage_error("trace step does not apply to its source term");
        }
        if (st.result && !alpha_eq(nxt, st.result))
            usage_error("trace step result does not match its occurrence");
        if ((occ.rule == SymRule::Beta || occ.rule == SymRule::BetaBot) && !occ.linear)
            all_linear = false;
        seq.push_back(occ);
        cur = nxt;
    }
    if (all_linear_out)
        *all_linear_out = all_linear;
    return seq;
}

SymTermPtr try_execute(const SymTermPtr& t0, const std::vector<RedexOccurrence>& steps) {
    SymTermPtr cur = t0;
    for (const auto& o : steps)
        cur = reduce_at(cur, o);
    return cur;
}

} // namespace

ReductionTrace postpone_e(const ReductionTrace& trace) {
    size_t j = 0;
    while (j < trace.steps.size() && is_e_rule(trace.steps[j].occ.rule))
        j++;
    for (size_t i = j; i < trace.steps.size(); i++)
        if (!is_b_rule(trace.steps[i].occ.rule))
            usage_error("trace must be eta-family steps followed by computation steps");
    if (j >= trace.steps.size())
        usage_error("trace must contain at least one computation step");

    bool all_linear = true;
    std::vector<RedexOccurrence> seq = replayed_occurrences(trace, &all_linear);
    SymTermPtr target = trace.end();
    if (j == 0)
        return assemble(trace.start, seq);

    size_t input_len = seq.size();
    size_t cxty0 = static_cast<size_t>(cxty_term(trace.start));
    auto fallback = [&]() -> ReductionTrace {
        auto found = bfs_reorder(trace.start, target, 2 * input_len + cxty0,
                                 kBetaPiRules, kERules, std::nullopt);
        if (!found)
            structural_error("no reordering of the trace exists within the search bound");
        return assemble(trace.start, *found);
    };

    const int kWorkCap = 10000;
    int work = 0;
    while (true) {
        int idx = -1;
        for (int i = static_cast<int>(seq.size()) - 2; i >= 0; i--)
            if (is_e_rule(seq[static_cast<size_t>(i)].rule) &&
                is_b_rule(seq[static_cast<size_t>(i) + 1].rule)) {
                idx = i;
                break;
            }
        if (idx < 0)
            break;
        if (++work > kWorkCap)
            return fallback();

        size_t ui = static_cast<size_t>(idx);
        SymTermPtr t0 = replay_prefix(trace.start, seq, ui);
        SymTermPtr t2 = reduce_at(reduce_at(t0, seq[ui]), seq[ui + 1]);
        auto plan = plan_swap_eb(t0, seq[ui], seq[ui + 1]);
        bool ok = false;
        SymTermPtr got;
        if (plan) {
            try {
                got = try_execute(t0, plan->steps);
                ok = plan->star_swapped ? sym_equiv(got, t2) : alpha_eq(got, t2);
            } catch (const Error& e) {
                if (e.kind != Error::Kind::Structural)
                    throw;
            }
        }
        if (!ok)
            return fallback();

        std::vector<RedexOccurrence> next(seq.begin(), seq.begin() + idx);
        for (const auto& o : plan->steps)
            next.push_back(o);
        if (!plan->star_swapped || alpha_eq(got, t2)) {
            next.insert(next.end(), seq.begin() + idx + 2, seq.end());
        } else {
            // The planned pair ends at a star-swapped variant; carry the
            // remaining steps across the equivalence one at a time.
            SymTermPtr curv = got;
            SymTermPtr curt = t2;
            for (size_t k = ui + 2; k < seq.size(); k++) {
                SymTermPtr truenext = reduce_at(curt, seq[k]);
                bool moved = false;
                for (const auto& o :
                     find_redexes(curv, nullptr, kAllSymRules & ~rule_bit(SymRule::Triv))) {
                    SymTermPtr r = reduce_at(curv, o);
                    if (sym_equiv(r, truenext)) {
                        next.push_back(o);
                        curv = r;
                        moved = true;
                        break;
                    }
                }
                if (!moved)
                    return fallback();
                curt = truenext;
            }
        }
        seq = std::move(next);
    }

    ReductionTrace out = assemble(trace.start, seq);
    if (!alpha_eq(out.end(), target)) {
        auto found = bfs_reorder(trace.start, target, 2 * input_len + cxty0,
                                 kBetaPiRules, kERules, std::nullopt);
        if (!found)
            structural_error("reordering ends at a star-swapped variant of the target; "
                             "no exact reordering exists");
        out = assemble(trace.start, *found);
    }
    if (all_linear && out.steps.size() > input_len)
        structural_error("length bound violated on a linear computation segment");
    return out;
}

ReductionTrace postpone_triv(const ReductionTrace& trace,
                             const std::optional<SymContext>& ctx) {
    size_t k = 0;
    while (k < trace.steps.size() && trace.steps[k].occ.rule == SymRule::Triv)
        k++;
    if (k != trace.steps.size() && trace.steps.size() != k + 1)
        usage_error("trace must be triv steps followed by exactly one other step");
    if (k == trace.steps.size()) {
        if (k == 0) {
            ReductionTrace out = trace;
            out.status = "ok";
            return out;
        }
        usage_error("trace must end with one computation or eta step");
    }
    if (trace.steps[k].occ.rule == SymRule::Triv)
        usage_error("trailing step must not be triv");

    std::vector<RedexOccurrence> seq = replayed_occurrences(trace, nullptr);
    SymTermPtr target = trace.end();
    if (k == 0)
        return assemble(trace.start, seq);

    size_t cxty0 = static_cast<size_t>(cxty_term(trace.start));
    auto fallback = [&]() -> ReductionTrace {
        auto found = bfs_reorder(trace.start, target, 2 * seq.size() + cxty0,
                                 kBetaPiEtaRules, rule_bit(SymRule::Triv), ctx);
        if (!found)
            structural_error("no reordering exists: the triv prefix reveals the final step");
        return assemble(trace.start, *found);
    };

    // Peel the single non-triv step leftwards through the prefix; each swap
    // leaves the already-moved triv suffix valid because endpoints agree.
    for (size_t i = k; i-- > 0;) {
        SymTermPtr t0 = replay_prefix(trace.start, seq, i);
        SymTermPtr t2 = reduce_at(reduce_at(t0, seq[i]), seq[i + 1]);
        auto plan = plan_swap_tb(t0, seq[i], seq[i + 1]);
        bool ok = false;
        SymTermPtr got;
        if (plan) {
            try {
                got = try_execute(t0, plan->steps);
                ok = alpha_eq(got, t2);
            } catch (const Error& e) {
                if (e.kind != Error::Kind::Structural)
                    throw;
            }
        }
        if (!ok)
            return fallback();
        std::vector<RedexOccurrence> next(seq.begin(), seq.begin() + static_cast<long>(i));
        for (const auto& o : plan->steps)
            next.push_back(o);
        next.insert(next.end(), seq.begin() + static_cast<long>(i) + 2, seq.end());
        seq = std::move(next);
    }

    ReductionTrace out = assemble(trace.start, seq);
    if (!alpha_eq(out.end(), target))
        return fallback();
    return out;
}

std::optional<ReductionTrace>
search_reordering(const ReductionTrace& trace, unsigned first_rules,
                  unsigned second_rules, bool up_to_star_swap,
                  const std::optional<SymContext>& ctx) {
    if (trace.steps.empty()) {
        ReductionTrace out = trace;
        out.status = "ok";
        return out;
    }
    std::vector<RedexOccurrence> seq = replayed_occurrences(trace, nullptr);
    size_t cxty0 = static_cast<size_t>(cxty_term(trace.start));
    auto found = bfs_reorder(trace.start, trace.end(), 2 * seq.size() + cxty0,
                             first_rules, second_rules, ctx, up_to_star_swap);
    if (!found)
        return std::nullopt;
    return assemble(trace.start, *found);
}

} // namespace symlog
