#include "symlog/sym_sn.hpp"

#include "symlog/error.hpp"

#include <map>

namespace symlog {

namespace {

struct MemoEntry {
    long long eta = 0;
    std::optional<RedexOccurrence> best; // an occurrence realizing eta
};

struct SearchState {
    std::map<std::string, MemoEntry> memo;
    std::map<std::string, bool> on_stack;
    long long visited = 0;
    long long budget;
    bool cycle = false;
    bool exhausted = false;
};

struct Frame {
    std::string key;
    SymTermPtr term;
    std::vector<RedexOccurrence> occs;
    std::vector<SymTermPtr> reducts;
    size_t next = 0;
    long long best_eta = -1;
    std::optional<RedexOccurrence> best;
};

// Iterative depth-first longest-path computation; reduction graphs at the
// sizes we explore share many nodes, so memoization is keyed on canonical
// (binder-renamed) printing.
void dfs(const SymTermPtr& root, SearchState& st) {
    std::vector<Frame> stack;
    auto push = [&](const SymTermPtr& t, const std::string& key) {
        st.visited++;
        if (st.visited > st.budget) {
            st.exhausted = true;
            return;
        }
        st.on_stack[key] = true;
        Frame f;
        f.key = key;
        f.term = t;
        f.occs = find_redexes(t, nullptr, kBetaPiRules);
        f.reducts.reserve(f.occs.size());
        for (const auto& o : f.occs)
            f.reducts.push_back(reduce_at(t, o));
        stack.push_back(std::move(f));
    };

    std::string rkey = canon_key(root);
    if (st.memo.count(rkey))
        return;
    push(root, rkey);
    while (!stack.empty() && !st.cycle && !st.exhausted) {
        Frame& f = stack.back();
        if (f.next < f.occs.size()) {
            size_t i = f.next++;
            std::string ckey = canon_key(f.reducts[i]);
            auto it = st.memo.find(ckey);
            if (it != st.memo.end()) {
                if (it->second.eta > f.best_eta) {
                    f.best_eta = it->second.eta;
                    f.best = f.occs[i];
                }
                continue;
            }
            if (st.on_stack.count(ckey) && st.on_stack[ckey]) {
                st.cycle = true;
                break;
            }
            push(f.reducts[i], ckey);
            continue;
        }
        // All children resolved.
        MemoEntry e;
        e.eta = f.occs.empty() ? 0 : f.best_eta + 1;
        e.best = f.best;
        st.memo[f.key] = e;
        st.on_stack[f.key] = false;
        std::string done = f.key;
        stack.pop_back();
        if (!stack.empty()) {
            Frame& parent = stack.back();
            long long child_eta = st.memo[done].eta;
            if (child_eta > parent.best_eta) {
                parent.best_eta = child_eta;
                parent.best = parent.occs[parent.next - 1];
            }
        }
    }
}

} // namespace

SNReport longest_reduction_betapi(const SymTermPtr& m, long long budget) {
    if (budget <= 0)
        usage_error("budget must be positive");
    SNReport rep;
    rep.cxty = cxty_term(m);
    SearchState st;
    st.budget = budget;
    dfs(m, st);
    if (st.cycle) {
        rep.status = "cycle-found";
        return rep;
    }
    if (st.exhausted) {
        rep.status = "fuel-exhausted";
        return rep;
    }
    rep.status = "normalizing";
    rep.eta = st.memo.at(canon_key(m)).eta;

    ReductionTrace wit;
    wit.start = m;
    wit.status = "ok";
    SymTermPtr cur = m;
    while (true) {
        const MemoEntry& e = st.memo.at(canon_key(cur));
        if (!e.best)
            break;
        cur = reduce_at(cur, *e.best);
        wit.steps.push_back({*e.best, cur});
    }
    rep.witness = std::move(wit);
    return rep;
}

namespace {

bool contains_alpha_eq(const SymTermPtr& haystack, const SymTermPtr& needle) {
    if (alpha_eq(haystack, needle))
        return true;
    int n = child_count(haystack);
    for (int i = 0; i < n; i++)
        if (contains_alpha_eq(child_at(haystack, i), needle))
            return true;
    return false;
}

std::vector<RedexOccurrence> root_betapi(const SymTermPtr& t) {
    std::vector<RedexOccurrence> out;
    for (const auto& o : find_redexes(t, nullptr, kBetaPiRules))
        if (o.path.empty())
            out.push_back(o);
    return out;
}

} // namespace

ZoomInReport validate_zoomin(const ZoomInSequence& seq, long long sn_budget) {
    ZoomInReport rep;
    rep.structural = true;
    for (size_t i = 0; i < seq.redexes.size(); i++) {
        auto roots = root_betapi(seq.redexes[i]);
        if (roots.empty()) {
            rep.structural = false;
            break;
        }
        if (i + 1 < seq.redexes.size()) {
            bool linked = false;
            for (const auto& o : roots)
                if (contains_alpha_eq(reduce_at(seq.redexes[i], o), seq.redexes[i + 1])) {
                    linked = true;
                    break;
                }
            if (!linked) {
                rep.structural = false;
                break;
            }
        }
    }

    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : seq.redexes) {
        if (r->kind != SymTerm::Kind::Star) {
            any_fail = true;
            continue;
        }
        for (const auto& half : {r->a, r->b}) {
            SNReport s = longest_reduction_betapi(half, sn_budget);
            if (s.status == "cycle-found")
                any_fail = true;
            else if (s.status == "fuel-exhausted")
                any_inconclusive = true;
        }
        SNReport whole = longest_reduction_betapi(r, sn_budget);
        if (whole.status == "normalizing")
            any_fail = true;
        else if (whole.status == "fuel-exhausted")
            any_inconclusive = true;
    }
    rep.minimal = any_fail ? "fail" : (any_inconclusive ? "inconclusive" : "pass");
    return rep;
}

} // namespace symlog
