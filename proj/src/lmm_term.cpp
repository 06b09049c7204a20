#include "symlog/lmm_term.hpp"

#include "symlog/error.hpp"

#include <map>

namespace symlog {

LmmSort lmm_sort_of(LmmTerm::Kind k) {
    switch (k) {
    case LmmTerm::Kind::Cut:
        return LmmSort::C;
    case LmmTerm::Kind::LVar:
    case LmmTerm::Kind::Lam:
    case LmmTerm::Kind::Mu:
    case LmmTerm::Kind::BarE:
        return LmmSort::L;
    default:
        return LmmSort::R;
    }
}

LmmSort lmm_sort(const LmmTermPtr& u) { return lmm_sort_of(u->kind); }

namespace {

void need_sort(const LmmTermPtr& u, LmmSort s, const char* what) {
    if (!u)
        structural_error(std::string("null ") + what);
    if (lmm_sort(u) != s)
        structural_error(std::string(what) + " has the wrong sort");
}

LmmTermPtr make(LmmTerm::Kind k, std::string name, LmmTypePtr ann, LmmTermPtr a,
                LmmTermPtr b) {
    auto t = std::make_shared<LmmTerm>();
    t->kind = k;
    t->name = std::move(name);
    t->ann = std::move(ann);
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

} // namespace

LmmTermPtr lmm_cut(LmmTermPtr t, LmmTermPtr e) {
    need_sort(t, LmmSort::L, "cut left component");
    need_sort(e, LmmSort::R, "cut right component");
    return make(LmmTerm::Kind::Cut, {}, nullptr, std::move(t), std::move(e));
}

LmmTermPtr lmm_lvar(std::string x) {
    return make(LmmTerm::Kind::LVar, std::move(x), nullptr, nullptr, nullptr);
}

LmmTermPtr lmm_lam(std::string x, LmmTypePtr ann, LmmTermPtr body) {
    if (!ann)
        structural_error("lambda requires an annotation");
    need_sort(body, LmmSort::L, "lambda body");
    return make(LmmTerm::Kind::Lam, std::move(x), std::move(ann), std::move(body), nullptr);
}

LmmTermPtr lmm_mu(std::string alpha, LmmTypePtr ann, LmmTermPtr body) {
    if (!ann)
        structural_error("mu requires an annotation");
    need_sort(body, LmmSort::C, "mu body");
    return make(LmmTerm::Kind::Mu, std::move(alpha), std::move(ann), std::move(body),
                nullptr);
}

LmmTermPtr lmm_bar(LmmTermPtr e) {
    need_sort(e, LmmSort::R, "bar argument");
    return make(LmmTerm::Kind::BarE, {}, nullptr, std::move(e), nullptr);
}

LmmTermPtr lmm_rvar(std::string alpha) {
    return make(LmmTerm::Kind::RVar, std::move(alpha), nullptr, nullptr, nullptr);
}

LmmTermPtr lmm_cons(LmmTermPtr head, LmmTermPtr tail) {
    need_sort(head, LmmSort::L, "cons head");
    need_sort(tail, LmmSort::R, "cons tail");
    return make(LmmTerm::Kind::Cons, {}, nullptr, std::move(head), std::move(tail));
}

LmmTermPtr lmm_mut(std::string x, LmmTypePtr ann, LmmTermPtr body) {
    if (!ann)
        structural_error("mut requires an annotation");
    need_sort(body, LmmSort::C, "mut body");
    return make(LmmTerm::Kind::MuTilde, std::move(x), std::move(ann), std::move(body),
                nullptr);
}

LmmTermPtr lmm_tilde(LmmTermPtr t) {
    need_sort(t, LmmSort::L, "tilde argument");
    return make(LmmTerm::Kind::TildeT, {}, nullptr, std::move(t), nullptr);
}

int child_count_lmm(const LmmTermPtr& u) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
    case LmmTerm::Kind::RVar:
        return 0;
    case LmmTerm::Kind::Cut:
    case LmmTerm::Kind::Cons:
        return 2;
    default:
        return 1;
    }
}

LmmTermPtr child_at_lmm(const LmmTermPtr& u, int i) {
    if (i < 0 || i >= child_count_lmm(u))
        structural_error("child index out of range");
    return i == 0 ? u->a : u->b;
}

LmmTermPtr subterm_at_lmm(const LmmTermPtr& u, const Path& p) {
    LmmTermPtr cur = u;
    for (int i : p)
        cur = child_at_lmm(cur, i);
    return cur;
}

LmmTermPtr replace_at_lmm(const LmmTermPtr& u, const Path& p, const LmmTermPtr& n) {
    if (p.empty()) {
        if (lmm_sort(u) != lmm_sort(n))
            structural_error("replacement changes the sort");
        return n;
    }
    auto t = std::make_shared<LmmTerm>(*u);
    Path rest(p.begin() + 1, p.end());
    (p[0] == 0 ? t->a : t->b) = replace_at_lmm(child_at_lmm(u, p[0]), rest, n);
    return t;
}

namespace {

bool binds_l(const LmmTermPtr& u) {
    return u->kind == LmmTerm::Kind::Lam || u->kind == LmmTerm::Kind::MuTilde;
}

bool binds_r(const LmmTermPtr& u) { return u->kind == LmmTerm::Kind::Mu; }

void fv_rec(const LmmTermPtr& u, bool want_l, std::set<std::string>& shadow,
            std::set<std::string>& out) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
        if (want_l && !shadow.count(u->name))
            out.insert(u->name);
        return;
    case LmmTerm::Kind::RVar:
        if (!want_l && !shadow.count(u->name))
            out.insert(u->name);
        return;
    default:
        break;
    }
    bool scoped = want_l ? binds_l(u) : binds_r(u);
    bool was = scoped && shadow.count(u->name) > 0;
    if (scoped)
        shadow.insert(u->name);
    int n = child_count_lmm(u);
    for (int i = 0; i < n; i++)
        fv_rec(child_at_lmm(u, i), want_l, shadow, out);
    if (scoped && !was)
        shadow.erase(u->name);
}

} // namespace

std::set<std::string> fv_l(const LmmTermPtr& u) {
    std::set<std::string> shadow, out;
    fv_rec(u, true, shadow, out);
    return out;
}

std::set<std::string> fv_r(const LmmTermPtr& u) {
    std::set<std::string> shadow, out;
    fv_rec(u, false, shadow, out);
    return out;
}

namespace {

int count_rec(const LmmTermPtr& u, bool want_l, const std::string& x) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
        return want_l && u->name == x ? 1 : 0;
    case LmmTerm::Kind::RVar:
        return !want_l && u->name == x ? 1 : 0;
    default:
        break;
    }
    bool scoped = (want_l ? binds_l(u) : binds_r(u)) && u->name == x;
    if (scoped)
        return 0;
    int total = 0;
    int n = child_count_lmm(u);
    for (int i = 0; i < n; i++)
        total += count_rec(child_at_lmm(u, i), want_l, x);
    return total;
}

} // namespace

int count_free_l(const LmmTermPtr& u, const std::string& x) {
    return count_rec(u, true, x);
}

int count_free_r(const LmmTermPtr& u, const std::string& alpha) {
    return count_rec(u, false, alpha);
}

namespace {

using Repl = std::map<std::string, LmmTermPtr>;

LmmTermPtr subst_rec(const LmmTermPtr& u, const Repl& lmap, const Repl& rmap);

LmmTermPtr rebuild(const LmmTermPtr& u, const LmmTermPtr& a, const LmmTermPtr& b) {
    if (a == u->a && b == u->b)
        return u;
    auto t = std::make_shared<LmmTerm>(*u);
    t->a = a;
    t->b = b;
    return t;
}

// Handles a binder of either kind: drops the shadowed entry, renames the
// binder when an active image would capture it.
LmmTermPtr subst_binder(const LmmTermPtr& u, bool l_binder, const Repl& lmap,
                        const Repl& rmap) {
    Repl al, ar;
    for (const auto& [v, img] : lmap)
        if (!(l_binder && v == u->name) && count_free_l(u->a, v) > 0)
            al.emplace(v, img);
    for (const auto& [v, img] : rmap)
        if (!(!l_binder && v == u->name) && count_free_r(u->a, v) > 0)
            ar.emplace(v, img);
    if (al.empty() && ar.empty())
        return u;

    std::set<std::string> img_names;
    for (const auto& m : {al, ar})
        for (const auto& [v, img] : m) {
            auto fl = l_binder ? fv_l(img) : fv_r(img);
            img_names.insert(fl.begin(), fl.end());
        }
    std::string binder = u->name;
    LmmTermPtr body = u->a;
    if (img_names.count(binder)) {
        std::set<std::string> avoid = img_names;
        auto bl = fv_l(body);
        auto br = fv_r(body);
        avoid.insert(bl.begin(), bl.end());
        avoid.insert(br.begin(), br.end());
        for (const auto& m : {al, ar})
            for (const auto& [v, img] : m)
                avoid.insert(v);
        avoid.insert(binder);
        std::string fresh = fresh_name(avoid);
        Repl rl, rr;
        if (l_binder)
            rl.emplace(binder, lmm_lvar(fresh));
        else
            rr.emplace(binder, lmm_rvar(fresh));
        body = subst_rec(body, rl, rr);
        binder = fresh;
    }
    auto t = std::make_shared<LmmTerm>(*u);
    t->name = binder;
    t->a = subst_rec(body, al, ar);
    return t;
}

LmmTermPtr subst_rec(const LmmTermPtr& u, const Repl& lmap, const Repl& rmap) {
    if (lmap.empty() && rmap.empty())
        return u;
    switch (u->kind) {
    case LmmTerm::Kind::LVar: {
        auto it = lmap.find(u->name);
        return it == lmap.end() ? u : it->second;
    }
    case LmmTerm::Kind::RVar: {
        auto it = rmap.find(u->name);
        return it == rmap.end() ? u : it->second;
    }
    case LmmTerm::Kind::Cut:
    case LmmTerm::Kind::Cons:
        return rebuild(u, subst_rec(u->a, lmap, rmap), subst_rec(u->b, lmap, rmap));
    case LmmTerm::Kind::BarE:
    case LmmTerm::Kind::TildeT:
        return rebuild(u, subst_rec(u->a, lmap, rmap), nullptr);
    case LmmTerm::Kind::Lam:
    case LmmTerm::Kind::MuTilde:
        return subst_binder(u, true, lmap, rmap);
    case LmmTerm::Kind::Mu:
        return subst_binder(u, false, lmap, rmap);
    }
    structural_error("unreachable term kind");
}

} // namespace

LmmTermPtr subst_l(const LmmTermPtr& u, const std::string& x, const LmmTermPtr& t) {
    need_sort(t, LmmSort::L, "substitution image for an l-variable");
    Repl lmap{{x, t}};
    return subst_rec(u, lmap, {});
}

LmmTermPtr subst_r(const LmmTermPtr& u, const std::string& alpha, const LmmTermPtr& e) {
    need_sort(e, LmmSort::R, "substitution image for an r-variable");
    Repl rmap{{alpha, e}};
    return subst_rec(u, {}, rmap);
}

namespace {

struct LmmAlphaEnv {
    std::map<std::string, int> ll, lr; // l-variable scopes, both sides
    std::map<std::string, int> rl, rr; // r-variable scopes, both sides
    int next = 0;
};

bool var_match(const std::map<std::string, int>& ml, const std::map<std::string, int>& mr,
               const std::string& a, const std::string& b) {
    auto ia = ml.find(a);
    auto ib = mr.find(b);
    if (ia == ml.end() && ib == mr.end())
        return a == b;
    if (ia != ml.end() && ib != mr.end())
        return ia->second == ib->second;
    return false;
}

bool alpha_rec(const LmmTermPtr& u, const LmmTermPtr& v, LmmAlphaEnv& env) {
    if (u->kind != v->kind)
        return false;
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
        return var_match(env.ll, env.lr, u->name, v->name);
    case LmmTerm::Kind::RVar:
        return var_match(env.rl, env.rr, u->name, v->name);
    case LmmTerm::Kind::Cut:
    case LmmTerm::Kind::Cons:
        return alpha_rec(u->a, v->a, env) && alpha_rec(u->b, v->b, env);
    case LmmTerm::Kind::BarE:
    case LmmTerm::Kind::TildeT:
        return alpha_rec(u->a, v->a, env);
    case LmmTerm::Kind::Lam:
    case LmmTerm::Kind::Mu:
    case LmmTerm::Kind::MuTilde: {
        if (!lmm_type_eq(u->ann, v->ann))
            return false;
        bool l_binder = u->kind != LmmTerm::Kind::Mu;
        auto& ml = l_binder ? env.ll : env.rl;
        auto& mr = l_binder ? env.lr : env.rr;
        int id = env.next++;
        auto iu = ml.find(u->name);
        bool hu = iu != ml.end();
        int ou = hu ? iu->second : 0;
        auto iv = mr.find(v->name);
        bool hv = iv != mr.end();
        int ov = hv ? iv->second : 0;
        ml[u->name] = id;
        mr[v->name] = id;
        bool ok = alpha_rec(u->a, v->a, env);
        if (hu)
            ml[u->name] = ou;
        else
            ml.erase(u->name);
        if (hv)
            mr[v->name] = ov;
        else
            mr.erase(v->name);
        return ok;
    }
    }
    return false;
}

} // namespace

bool alpha_eq_lmm(const LmmTermPtr& u, const LmmTermPtr& v) {
    LmmAlphaEnv env;
    return alpha_rec(u, v, env);
}

namespace {

void canon_rec(const LmmTermPtr& u, std::map<std::string, int>& lb,
               std::map<std::string, int>& rb, int& next, std::string& out) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar: {
        auto it = lb.find(u->name);
        out += it != lb.end() ? "#" + std::to_string(it->second) : "$l:" + u->name;
        return;
    }
    case LmmTerm::Kind::RVar: {
        auto it = rb.find(u->name);
        out += it != rb.end() ? "#" + std::to_string(it->second) : "$r:" + u->name;
        return;
    }
    case LmmTerm::Kind::Cut:
        out += "<";
        canon_rec(u->a, lb, rb, next, out);
        out += "|";
        canon_rec(u->b, lb, rb, next, out);
        out += ">";
        return;
    case LmmTerm::Kind::Cons:
        out += "(";
        canon_rec(u->a, lb, rb, next, out);
        out += ".";
        canon_rec(u->b, lb, rb, next, out);
        out += ")";
        return;
    case LmmTerm::Kind::BarE:
        out += "B(";
        canon_rec(u->a, lb, rb, next, out);
        out += ")";
        return;
    case LmmTerm::Kind::TildeT:
        out += "T(";
        canon_rec(u->a, lb, rb, next, out);
        out += ")";
        return;
    case LmmTerm::Kind::Lam:
    case LmmTerm::Kind::Mu:
    case LmmTerm::Kind::MuTilde: {
        const char* tag = u->kind == LmmTerm::Kind::Lam
                              ? "L"
                              : (u->kind == LmmTerm::Kind::Mu ? "M" : "W");
        out += tag;
        out += "[" + print_lmm_type(canonicalize_type(u->ann)) + "]{";
        auto& scope = u->kind == LmmTerm::Kind::Mu ? rb : lb;
        auto it = scope.find(u->name);
        bool had = it != scope.end();
        int old = had ? it->second : 0;
        scope[u->name] = next++;
        canon_rec(u->a, lb, rb, next, out);
        if (had)
            scope[u->name] = old;
        else
            scope.erase(u->name);
        out += "}";
        return;
    }
    }
}

} // namespace

std::string canon_key_lmm(const LmmTermPtr& u) {
    std::map<std::string, int> lb, rb;
    int next = 0;
    std::string out;
    canon_rec(u, lb, rb, next, out);
    return out;
}

namespace {

bool type_has_neg(const LmmTypePtr& t) {
    switch (t->kind) {
    case LmmType::Kind::Atom:
        return false;
    case LmmType::Kind::Arrow:
        return type_has_neg(t->a) || type_has_neg(t->b);
    case LmmType::Kind::Neg:
        return true;
    }
    return false;
}

} // namespace

bool is_pure_lmm(const LmmTermPtr& u) {
    switch (u->kind) {
    case LmmTerm::Kind::BarE:
    case LmmTerm::Kind::TildeT:
        return false;
    default:
        break;
    }
    if (u->ann && type_has_neg(u->ann))
        return false;
    int n = child_count_lmm(u);
    for (int i = 0; i < n; i++)
        if (!is_pure_lmm(child_at_lmm(u, i)))
            return false;
    return true;
}

int cxty_lmm(const LmmTermPtr& u) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
    case LmmTerm::Kind::RVar:
        return 0;
    case LmmTerm::Kind::Cut:
    case LmmTerm::Kind::Cons:
        return cxty_lmm(u->a) + cxty_lmm(u->b);
    default:
        return 1 + cxty_lmm(u->a);
    }
}

namespace {

bool self_delimiting(const LmmTermPtr& u) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar:
    case LmmTerm::Kind::RVar:
    case LmmTerm::Kind::BarE:
    case LmmTerm::Kind::TildeT:
        return true;
    default:
        return false;
    }
}

void print_rec(const LmmTermPtr& u, std::string& out) {
    switch (u->kind) {
    case LmmTerm::Kind::Cut:
        out += "< ";
        print_rec(u->a, out);
        out += " | ";
        print_rec(u->b, out);
        out += " >";
        return;
    case LmmTerm::Kind::LVar:
    case LmmTerm::Kind::RVar:
        out += u->name;
        return;
    case LmmTerm::Kind::Lam:
        out += "\\" + u->name + ":" + print_lmm_type(u->ann) + ". ";
        print_rec(u->a, out);
        return;
    case LmmTerm::Kind::Mu:
        out += "mu " + u->name + ":" + print_lmm_type(u->ann) + ". ";
        print_rec(u->a, out);
        return;
    case LmmTerm::Kind::MuTilde:
        out += "mut " + u->name + ":" + print_lmm_type(u->ann) + ". ";
        print_rec(u->a, out);
        return;
    case LmmTerm::Kind::BarE:
        out += "bar(";
        print_rec(u->a, out);
        out += ")";
        return;
    case LmmTerm::Kind::TildeT:
        out += "tilde(";
        print_rec(u->a, out);
        out += ")";
        return;
    case LmmTerm::Kind::Cons:
        // The head must not swallow the dot, so anything that is not
        // self-delimiting gets parentheses.
        if (self_delimiting(u->a)) {
            print_rec(u->a, out);
        } else {
            out += "(";
            print_rec(u->a, out);
            out += ")";
        }
        out += " . ";
        print_rec(u->b, out);
        return;
    }
}

} // namespace

std::string print_lmm(const LmmTermPtr& u) {
    if (!u)
        structural_error("null term");
    std::string out;
    print_rec(u, out);
    return out;
}

} // namespace symlog
