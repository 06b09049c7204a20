#include "symlog/gen.hpp"

#include "symlog/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace symlog {

namespace {

struct DeadEnd {};

void collect_sym_names(const SymTermPtr& m, std::set<std::string>& out) {
    if (m->kind == SymTerm::Kind::Var || m->kind == SymTerm::Kind::Lam) {
        out.insert(m->name);
    }
    for (int i = 0; i < child_count(m); ++i) collect_sym_names(child_at(m, i), out);
}

void collect_lmm_names(const LmmTermPtr& u, std::set<std::string>& out) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
    case LmmTerm::Kind::RVar:
    case LmmTerm::Kind::Lam:
    case LmmTerm::Kind::Mu:
    case LmmTerm::Kind::MuTilde:
        out.insert(u->name);
        break;
    default:
        break;
    }
    for (int i = 0; i < child_count_lmm(u); ++i) {
        collect_lmm_names(child_at_lmm(u, i), out);
    }
}

class SymGen {
public:
    explicit SymGen(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    GenSym run() {
        if (cfg_.max_size < 1) usage_error("max_size must be at least 1");
        if (cfg_.atom_pool.empty()) usage_error("atom_pool must be nonempty");
        if (cfg_.max_size == 1) {
            SymContext ctx;
            SymTypePtr ty = random_mtype(1);
            ctx.bind("x0", ty);
            return {ctx, sym_var("x0"), ty};
        }
        for (int attempt = 0; attempt < 1000; ++attempt) {
            try {
                return attempt_once();
            } catch (const DeadEnd&) {
            }
        }
        structural_error("term generator exceeded its retry bound; "
                         "the cost accounting is broken");
    }

private:
    GenConfig cfg_;
    std::mt19937_64 rng_;

    int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
    }

    SymTypePtr random_mtype(int depth) {
        int r = pick(depth > 0 ? 10 : 6);
        std::string name = cfg_.atom_pool[pick((int)cfg_.atom_pool.size())];
        if (r < 3) return sym_atom(name);
        if (r < 6) return sym_neg_atom(name);
        if (r < 8) return sym_and(random_mtype(depth - 1), random_mtype(depth - 1));
        return sym_or(random_mtype(depth - 1), random_mtype(depth - 1));
    }

    // Upper bound on the nodes needed to inhabit `t`. The seeded
    // complementary pair makes a bottom command available in 3 nodes, hence
    // any m-type in at most 4 via a lambda.
    int cost(const SymContext& ctx, const SymTypePtr& t) {
        if (t->kind == SymType::Kind::Bottom) return 3;
        for (const auto& [name, ty] : ctx.items()) {
            if (type_eq(ty, t)) return 1;
        }
        switch (t->kind) {
        case SymType::Kind::And:
            return std::min(4, 1 + cost(ctx, t->left) + cost(ctx, t->right));
        case SymType::Kind::Or:
            return std::min(4, 1 + std::min(cost(ctx, t->left), cost(ctx, t->right)));
        default:
            return 4;
        }
    }

    GenSym attempt_once() {
        SymContext ctx;
        ctx.bind("x0", sym_atom(cfg_.atom_pool[0]));
        ctx.bind("x1", sym_neg_atom(cfg_.atom_pool[0]));
        int extras = pick(4);
        for (int i = 0; i < extras; ++i) {
            ctx.bind("x" + std::to_string(2 + i), random_mtype(2));
        }
        SymTypePtr target;
        if (chance(cfg_.bottom_bias)) {
            target = sym_bottom();
        } else if (chance(0.5)) {
            target = ctx.items()[pick((int)ctx.items().size())].second;
        } else {
            target = random_mtype(2);
        }
        int budget = 1 + pick(cfg_.max_size);
        if (budget < cost(ctx, target)) throw DeadEnd{};
        SymTermPtr term = gen(ctx, target, budget);
        SymTypeResult checked = typecheck_sym(ctx, term);
        if (!type_eq(checked.type, target)) {
            structural_error("generator produced a term at the wrong type");
        }
        return {ctx, term, target};
    }

    SymTermPtr gen(const SymContext& ctx, const SymTypePtr& target, int budget) {
        enum Opt { OVar, OPair, OInj1, OInj2, OLam, OStar };
        std::vector<Opt> opts;
        std::vector<std::string> matches;
        for (const auto& [name, ty] : ctx.items()) {
            if (type_eq(ty, target)) matches.push_back(name);
        }
        if (target->kind == SymType::Kind::Bottom) {
            if (budget >= 3) opts.push_back(OStar);
        } else {
            if (!matches.empty()) opts.push_back(OVar);
            if (target->kind == SymType::Kind::And &&
                budget >= 1 + cost(ctx, target->left) + cost(ctx, target->right)) {
                opts.push_back(OPair);
            }
            if (target->kind == SymType::Kind::Or) {
                if (budget >= 1 + cost(ctx, target->left)) opts.push_back(OInj1);
                if (budget >= 1 + cost(ctx, target->right)) opts.push_back(OInj2);
            }
            if (budget >= 4) opts.push_back(OLam);
        }
        if (opts.empty()) throw DeadEnd{};
        Opt choice = opts[pick((int)opts.size())];
        if (choice == OVar && opts.size() > 1 && budget >= 6 && chance(0.7)) {
            std::vector<Opt> structural(opts.begin(), opts.end());
            structural.erase(std::remove(structural.begin(), structural.end(), OVar),
                             structural.end());
            choice = structural[pick((int)structural.size())];
        }
        switch (choice) {
        case OVar:
            return sym_var(matches[pick((int)matches.size())]);
        case OPair: {
            int cl = cost(ctx, target->left);
            int cr = cost(ctx, target->right);
            int slack = budget - 1 - cl - cr;
            int bl = cl + (slack > 0 ? pick(slack + 1) : 0);
            return sym_pair(gen(ctx, target->left, bl),
                            gen(ctx, target->right, budget - 1 - bl));
        }
        case OInj1:
            return sym_inj(1, target->right, gen(ctx, target->left, budget - 1));
        case OInj2:
            return sym_inj(2, target->left, gen(ctx, target->right, budget - 1));
        case OLam: {
            std::string x = fresh_name(ctx.names());
            SymTypePtr ann = neg_type(target);
            return sym_lam(x, ann,
                           gen(ctx.extended(x, ann), sym_bottom(), budget - 1));
        }
        case OStar: {
            SymTypePtr t;
            if (!ctx.empty() && !chance(0.3)) {
                t = ctx.items()[pick((int)ctx.items().size())].second;
            } else {
                t = random_mtype(2);
            }
            if (budget < 1 + cost(ctx, t) + cost(ctx, neg_type(t))) {
                t = sym_atom(cfg_.atom_pool[0]); // the seeded pair
            }
            SymTypePtr nt = neg_type(t);
            int cl = cost(ctx, t);
            int cr = cost(ctx, nt);
            if (budget < 1 + cl + cr) throw DeadEnd{};
            int slack = budget - 1 - cl - cr;
            int bl = cl + (slack > 0 ? pick(slack + 1) : 0);
            return sym_star(gen(ctx, t, bl), gen(ctx, nt, budget - 1 - bl));
        }
        }
        throw DeadEnd{};
    }
};

class LmmGen {
public:
    explicit LmmGen(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    GenLmm run() {
        if (cfg_.max_size < 1) usage_error("max_size must be at least 1");
        if (cfg_.atom_pool.empty()) usage_error("atom_pool must be nonempty");
        if (cfg_.max_size == 1) {
            LmmSequent seq;
            LmmTypePtr ty = random_ltype(1);
            if (chance(0.5)) {
                seq.bind_l("x0", ty);
                return {seq, lmm_lvar("x0")};
            }
            seq.bind_r("a0", ty);
            return {seq, lmm_rvar("a0")};
        }
        for (int attempt = 0; attempt < 1000; ++attempt) {
            try {
                return attempt_once();
            } catch (const DeadEnd&) {
            }
        }
        structural_error("term generator exceeded its retry bound; "
                         "the cost accounting is broken");
    }

private:
    GenConfig cfg_;
    std::mt19937_64 rng_;

    int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
    }

    LmmTypePtr random_ltype(int depth) {
        int r = pick(depth > 0 ? 10 : 6);
        std::string name = cfg_.atom_pool[pick((int)cfg_.atom_pool.size())];
        if (r < 6) return lmm_atom(name);
        if (r < 8) return lmm_arrow(random_ltype(depth - 1), random_ltype(depth - 1));
        return lmm_neg(random_ltype(depth - 1));
    }

    LmmTypePtr random_seq_type(const LmmSequent& seq) {
        int total = (int)(seq.gamma().size() + seq.delta().size());
        int i = pick(total);
        if (i < (int)seq.gamma().size()) return seq.gamma()[i].second;
        return seq.delta()[i - (int)seq.gamma().size()].second;
    }

    // Upper bounds; mu / mu-tilde close any type over the seeded cut pair.
    int cost_l(const LmmSequent& seq, const LmmTypePtr& t) {
        for (const auto& [name, ty] : seq.gamma()) {
            if (lmm_type_eq(ty, t)) return 1;
        }
        LmmTypePtr c = canonicalize_type(t);
        int best = 4;
        if (c->kind == LmmType::Kind::Arrow) {
            best = std::min(best, 1 + cost_l(seq, c->b));
        }
        if (c->kind == LmmType::Kind::Neg) {
            best = std::min(best, 1 + cost_r(seq, c->a));
        }
        return best;
    }

    int cost_r(const LmmSequent& seq, const LmmTypePtr& t) {
        for (const auto& [name, ty] : seq.delta()) {
            if (lmm_type_eq(ty, t)) return 1;
        }
        LmmTypePtr c = canonicalize_type(t);
        int best = 4;
        if (c->kind == LmmType::Kind::Arrow) {
            best = std::min(best, 1 + cost_l(seq, c->a) + cost_r(seq, c->b));
        }
        if (c->kind == LmmType::Kind::Neg) {
            best = std::min(best, 1 + cost_l(seq, c->a));
        }
        return best;
    }

    GenLmm attempt_once() {
        LmmSequent seq;
        LmmTypePtr t0 = random_ltype(1);
        seq.bind_l("x0", t0);
        seq.bind_r("a0", t0);
        int gx = pick(3);
        for (int i = 0; i < gx; ++i) {
            seq.bind_l("x" + std::to_string(1 + i), random_ltype(2));
        }
        int dx = pick(3);
        for (int i = 0; i < dx; ++i) {
            seq.bind_r("a" + std::to_string(1 + i), random_ltype(2));
        }
        int budget = 1 + pick(cfg_.max_size);
        LmmTermPtr term;
        if (chance(cfg_.bottom_bias)) {
            term = gen_c(seq, budget);
        } else {
            LmmTypePtr target =
                chance(0.5) ? random_seq_type(seq) : random_ltype(2);
            if (chance(0.5)) {
                if (budget < cost_l(seq, target)) throw DeadEnd{};
                term = gen_l(seq, target, budget);
            } else {
                if (budget < cost_r(seq, target)) throw DeadEnd{};
                term = gen_r(seq, target, budget);
            }
        }
        typecheck_lmm(seq, term); // self-check; throws on generator bugs
        return {seq, term};
    }

    LmmTermPtr gen_c(const LmmSequent& seq, int budget) {
        if (budget < 3) throw DeadEnd{};
        LmmTypePtr u = chance(0.3) ? random_ltype(2) : random_seq_type(seq);
        if (budget < 1 + cost_l(seq, u) + cost_r(seq, u)) {
            u = seq.gamma()[0].second; // the seeded pair type
        }
        int cl = cost_l(seq, u);
        int cr = cost_r(seq, u);
        if (budget < 1 + cl + cr) throw DeadEnd{};
        int slack = budget - 1 - cl - cr;
        int bl = cl + (slack > 0 ? pick(slack + 1) : 0);
        return lmm_cut(gen_l(seq, u, bl), gen_r(seq, u, budget - 1 - bl));
    }

    LmmTermPtr gen_l(const LmmSequent& seq, const LmmTypePtr& target, int budget) {
        enum Opt { OVar, OMu, OLam, OBar };
        LmmTypePtr c = canonicalize_type(target);
        std::vector<Opt> opts;
        std::vector<std::string> matches;
        for (const auto& [name, ty] : seq.gamma()) {
            if (lmm_type_eq(ty, target)) matches.push_back(name);
        }
        if (!matches.empty()) opts.push_back(OVar);
        if (budget >= 4) opts.push_back(OMu);
        if (c->kind == LmmType::Kind::Arrow && budget >= 1 + cost_l(seq, c->b)) {
            opts.push_back(OLam);
        }
        if (c->kind == LmmType::Kind::Neg && budget >= 1 + cost_r(seq, c->a)) {
            opts.push_back(OBar);
        }
        if (opts.empty()) throw DeadEnd{};
        Opt choice = opts[pick((int)opts.size())];
        if (choice == OVar && opts.size() > 1 && budget >= 6 && chance(0.7)) {
            std::vector<Opt> structural(opts.begin() + 1, opts.end());
            choice = structural[pick((int)structural.size())];
        }
        switch (choice) {
        case OVar:
            return lmm_lvar(matches[pick((int)matches.size())]);
        case OMu: {
            std::string alpha = fresh_name(seq.names());
            return lmm_mu(alpha, target,
                          gen_c(seq.extended_r(alpha, target), budget - 1));
        }
        case OLam: {
            std::string x = fresh_name(seq.names());
            return lmm_lam(x, c->a,
                           gen_l(seq.extended_l(x, c->a), c->b, budget - 1));
        }
        case OBar:
            return lmm_bar(gen_r(seq, c->a, budget - 1));
        }
        throw DeadEnd{};
    }

    LmmTermPtr gen_r(const LmmSequent& seq, const LmmTypePtr& target, int budget) {
        enum Opt { OVar, OMuT, OCons, OTilde };
        LmmTypePtr c = canonicalize_type(target);
        std::vector<Opt> opts;
        std::vector<std::string> matches;
        for (const auto& [name, ty] : seq.delta()) {
            if (lmm_type_eq(ty, target)) matches.push_back(name);
        }
        if (!matches.empty()) opts.push_back(OVar);
        if (budget >= 4) opts.push_back(OMuT);
        if (c->kind == LmmType::Kind::Arrow &&
            budget >= 1 + cost_l(seq, c->a) + cost_r(seq, c->b)) {
            opts.push_back(OCons);
        }
        if (c->kind == LmmType::Kind::Neg && budget >= 1 + cost_l(seq, c->a)) {
            opts.push_back(OTilde);
        }
        if (opts.empty()) throw DeadEnd{};
        Opt choice = opts[pick((int)opts.size())];
        if (choice == OVar && opts.size() > 1 && budget >= 6 && chance(0.7)) {
            std::vector<Opt> structural(opts.begin() + 1, opts.end());
            choice = structural[pick((int)structural.size())];
        }
        switch (choice) {
        case OVar:
            return lmm_rvar(matches[pick((int)matches.size())]);
        case OMuT: {
            std::string x = fresh_name(seq.names());
            return lmm_mut(x, target,
                           gen_c(seq.extended_l(x, target), budget - 1));
        }
        case OCons: {
            int cl = cost_l(seq, c->a);
            int cr = cost_r(seq, c->b);
            int slack = budget - 1 - cl - cr;
            int bl = cl + (slack > 0 ? pick(slack + 1) : 0);
            return lmm_cons(gen_l(seq, c->a, bl),
                            gen_r(seq, c->b, budget - 1 - bl));
        }
        case OTilde:
            return lmm_tilde(gen_l(seq, c->a, budget - 1));
        }
        throw DeadEnd{};
    }
};

void sym_positions(const SymTermPtr& m, Path& cur, std::vector<Path>& out) {
    out.push_back(cur);
    for (int i = 0; i < child_count(m); ++i) {
        cur.push_back(i);
        sym_positions(child_at(m, i), cur, out);
        cur.pop_back();
    }
}

void lmm_positions(const LmmTermPtr& u, Path& cur, std::vector<Path>& out) {
    out.push_back(cur);
    for (int i = 0; i < child_count_lmm(u); ++i) {
        cur.push_back(i);
        lmm_positions(child_at_lmm(u, i), cur, out);
        cur.pop_back();
    }
}

SymContext sym_local_ctx(SymContext ctx, const SymTermPtr& m, const Path& p) {
    SymTermPtr cur = m;
    for (int step : p) {
        if (cur->kind == SymTerm::Kind::Lam) {
            ctx = ctx.extended(cur->name, cur->ann);
        }
        cur = child_at(cur, step);
    }
    return ctx;
}

LmmSequent lmm_local_seq(LmmSequent seq, const LmmTermPtr& u, const Path& p) {
    LmmTermPtr cur = u;
    for (int step : p) {
        switch (cur->kind) {
        case LmmTerm::Kind::Lam:
        case LmmTerm::Kind::MuTilde:
            seq = seq.extended_l(cur->name, cur->ann);
            break;
        case LmmTerm::Kind::Mu:
            seq = seq.extended_r(cur->name, cur->ann);
            break;
        default:
            break;
        }
        cur = child_at_lmm(cur, step);
    }
    return seq;
}

} // namespace

GenSym gen_sym(const GenConfig& cfg) { return SymGen(cfg).run(); }

GenLmm gen_lmm(const GenConfig& cfg) { return LmmGen(cfg).run(); }

ShrunkSym shrink_sym(const SymContext& ctx0, const SymTermPtr& term0,
                     const SymPredicate& failing) {
    if (!failing(ctx0, term0)) {
        usage_error("shrink requires an input the predicate fails on");
    }
    SymContext ctx = ctx0;
    SymTermPtr term = term0;
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<Path> ps;
        Path scratch;
        sym_positions(term, scratch, ps);
        std::set<std::string> bound = ctx.names();

        for (const Path& p : ps) {
            if (p.empty()) continue;
            SymTermPtr sub = subterm_at(term, p);
            bool closed = true;
            for (const auto& v : free_vars(sub)) {
                if (!bound.count(v)) {
                    closed = false;
                    break;
                }
            }
            if (closed && failing(ctx, sub)) {
                term = sub;
                progress = true;
                break;
            }
        }
        if (progress) continue;

        for (const Path& p : ps) {
            SymTermPtr sub = subterm_at(term, p);
            if (sub->kind == SymTerm::Kind::Var) continue;
            auto typed = try_type_sym(sym_local_ctx(ctx, term, p), sub);
            if (!typed || !is_m_type(typed->type)) continue;
            std::set<std::string> avoid = ctx.names();
            collect_sym_names(term, avoid);
            std::string v = fresh_name(avoid);
            SymContext cc = ctx;
            cc.bind(v, typed->type);
            SymTermPtr cand = replace_at(term, p, sym_var(v));
            if (failing(cc, cand)) {
                ctx = cc;
                term = cand;
                progress = true;
                break;
            }
        }
    }
    return {ctx, term};
}

ShrunkLmm shrink_lmm(const LmmSequent& seq0, const LmmTermPtr& term0,
                     const LmmPredicate& failing) {
    if (!failing(seq0, term0)) {
        usage_error("shrink requires an input the predicate fails on");
    }
    LmmSequent seq = seq0;
    LmmTermPtr term = term0;
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<Path> ps;
        Path scratch;
        lmm_positions(term, scratch, ps);
        std::set<std::string> bound_l, bound_r;
        for (const auto& [n, t] : seq.gamma()) bound_l.insert(n);
        for (const auto& [n, t] : seq.delta()) bound_r.insert(n);

        for (const Path& p : ps) {
            if (p.empty()) continue;
            LmmTermPtr sub = subterm_at_lmm(term, p);
            bool closed = true;
            for (const auto& v : fv_l(sub)) {
                if (!bound_l.count(v)) closed = false;
            }
            for (const auto& v : fv_r(sub)) {
                if (!bound_r.count(v)) closed = false;
            }
            if (closed && failing(seq, sub)) {
                term = sub;
                progress = true;
                break;
            }
        }
        if (progress) continue;

        for (const Path& p : ps) {
            LmmTermPtr sub = subterm_at_lmm(term, p);
            LmmSort sort = lmm_sort(sub);
            if (sort == LmmSort::C) continue;
            if (sub->kind == LmmTerm::Kind::LVar ||
                sub->kind == LmmTerm::Kind::RVar) {
                continue;
            }
            auto typed = try_type_lmm(lmm_local_seq(seq, term, p), sub);
            if (!typed || !*typed) continue;
            std::set<std::string> avoid = seq.names();
            collect_lmm_names(term, avoid);
            std::string v = fresh_name(avoid);
            LmmSequent cc = seq;
            LmmTermPtr var;
            if (sort == LmmSort::L) {
                cc.bind_l(v, **typed);
                var = lmm_lvar(v);
            } else {
                cc.bind_r(v, **typed);
                var = lmm_rvar(v);
            }
            LmmTermPtr cand = replace_at_lmm(term, p, var);
            if (failing(cc, cand)) {
                seq = cc;
                term = cand;
                progress = true;
                break;
            }
        }
    }
    return {seq, term};
}

} // namespace symlog
