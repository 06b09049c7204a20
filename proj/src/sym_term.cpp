#include "symlog/sym_term.hpp"

#include "symlog/error.hpp"

#include <map>

namespace symlog {

SymTermPtr sym_var(std::string x) {
    auto t = std::make_shared<SymTerm>();
    t->kind = SymTerm::Kind::Var;
    t->name = std::move(x);
    return t;
}

SymTermPtr sym_pair(SymTermPtr p1, SymTermPtr p2) {
    if (!p1 || !p2)
        structural_error("null component in pair");
    auto t = std::make_shared<SymTerm>();
    t->kind = SymTerm::Kind::Pair;
    t->a = std::move(p1);
    t->b = std::move(p2);
    return t;
}

SymTermPtr sym_inj(int side, SymTypePtr other, SymTermPtr body) {
    if (side != 1 && side != 2)
        structural_error("injection side must be 1 or 2");
    if (!is_m_type(other))
        structural_error("injection annotation must be an m-type");
    if (!body)
        structural_error("null injection body");
    auto t = std::make_shared<SymTerm>();
    t->kind = SymTerm::Kind::Inj;
    t->side = side;
    t->ann = std::move(other);
    t->a = std::move(body);
    return t;
}

SymTermPtr sym_lam(std::string x, SymTypePtr ann, SymTermPtr body) {
    if (!is_m_type(ann))
        structural_error("lambda annotation must be an m-type");
    if (!body)
        structural_error("null lambda body");
    auto t = std::make_shared<SymTerm>();
    t->kind = SymTerm::Kind::Lam;
    t->name = std::move(x);
    t->ann = std::move(ann);
    t->a = std::move(body);
    return t;
}

SymTermPtr sym_star(SymTermPtr l, SymTermPtr r) {
    if (!l || !r)
        structural_error("null component in star");
    auto t = std::make_shared<SymTerm>();
    t->kind = SymTerm::Kind::Star;
    t->a = std::move(l);
    t->b = std::move(r);
    return t;
}

int child_count(const SymTermPtr& m) {
    switch (m->kind) {
    case SymTerm::Kind::Var: return 0;
    case SymTerm::Kind::Inj:
    case SymTerm::Kind::Lam: return 1;
    case SymTerm::Kind::Pair:
    case SymTerm::Kind::Star: return 2;
    }
    return 0;
}

SymTermPtr child_at(const SymTermPtr& m, int i) {
    if (i < 0 || i >= child_count(m))
        structural_error("child index out of range");
    return i == 0 ? m->a : m->b;
}

SymTermPtr subterm_at(const SymTermPtr& m, const Path& p) {
    SymTermPtr cur = m;
    for (int i : p)
        cur = child_at(cur, i);
    return cur;
}

static SymTermPtr with_child(const SymTermPtr& m, int i, SymTermPtr c) {
    auto t = std::make_shared<SymTerm>(*m);
    (i == 0 ? t->a : t->b) = std::move(c);
    return t;
}

SymTermPtr replace_at(const SymTermPtr& m, const Path& p, const SymTermPtr& n) {
    if (p.empty())
        return n;
    Path rest(p.begin() + 1, p.end());
    return with_child(m, p[0], replace_at(child_at(m, p[0]), rest, n));
}

static void fv_rec(const SymTermPtr& m, std::set<std::string>& bound,
                   std::set<std::string>& out) {
    switch (m->kind) {
    case SymTerm::Kind::Var:
        if (!bound.count(m->name))
            out.insert(m->name);
        break;
    case SymTerm::Kind::Lam: {
        bool was = bound.count(m->name) > 0;
        bound.insert(m->name);
        fv_rec(m->a, bound, out);
        if (!was)
            bound.erase(m->name);
        break;
    }
    case SymTerm::Kind::Inj:
        fv_rec(m->a, bound, out);
        break;
    case SymTerm::Kind::Pair:
    case SymTerm::Kind::Star:
        fv_rec(m->a, bound, out);
        fv_rec(m->b, bound, out);
        break;
    }
}

std::set<std::string> free_vars(const SymTermPtr& m) {
    std::set<std::string> bound, out;
    fv_rec(m, bound, out);
    return out;
}

int count_free(const SymTermPtr& m, const std::string& x) {
    switch (m->kind) {
    case SymTerm::Kind::Var:
        return m->name == x ? 1 : 0;
    case SymTerm::Kind::Lam:
        return m->name == x ? 0 : count_free(m->a, x);
    case SymTerm::Kind::Inj:
        return count_free(m->a, x);
    case SymTerm::Kind::Pair:
    case SymTerm::Kind::Star:
        return count_free(m->a, x) + count_free(m->b, x);
    }
    return 0;
}

static void free_pos_rec(const SymTermPtr& m, const std::string& x, Path& here,
                         std::vector<Path>& out) {
    switch (m->kind) {
    case SymTerm::Kind::Var:
        if (m->name == x)
            out.push_back(here);
        break;
    case SymTerm::Kind::Lam:
        if (m->name == x)
            return;
        here.push_back(0);
        free_pos_rec(m->a, x, here, out);
        here.pop_back();
        break;
    case SymTerm::Kind::Inj:
        here.push_back(0);
        free_pos_rec(m->a, x, here, out);
        here.pop_back();
        break;
    case SymTerm::Kind::Pair:
    case SymTerm::Kind::Star:
        here.push_back(0);
        free_pos_rec(m->a, x, here, out);
        here.back() = 1;
        free_pos_rec(m->b, x, here, out);
        here.pop_back();
        break;
    }
}

std::vector<Path> free_positions(const SymTermPtr& m, const std::string& x) {
    std::vector<Path> out;
    Path here;
    free_pos_rec(m, x, here, out);
    return out;
}

std::string fresh_name(const std::set<std::string>& avoid) {
    for (int i = 0;; i++) {
        std::string cand = "x" + std::to_string(i);
        if (!avoid.count(cand))
            return cand;
    }
}

// Shared engine for single and simultaneous substitution.
static SymTermPtr subst_many(const SymTermPtr& m,
                             const std::map<std::string, SymTermPtr>& repl) {
    if (repl.empty())
        return m;
    switch (m->kind) {
    case SymTerm::Kind::Var: {
        auto it = repl.find(m->name);
        return it == repl.end() ? m : it->second;
    }
    case SymTerm::Kind::Pair:
        return sym_pair(subst_many(m->a, repl), subst_many(m->b, repl));
    case SymTerm::Kind::Star:
        return sym_star(subst_many(m->a, repl), subst_many(m->b, repl));
    case SymTerm::Kind::Inj:
        return sym_inj(m->side, m->ann, subst_many(m->a, repl));
    case SymTerm::Kind::Lam: {
        std::map<std::string, SymTermPtr> active;
        for (const auto& [v, img] : repl)
            if (v != m->name && count_free(m->a, v) > 0)
                active.emplace(v, img);
        if (active.empty())
            return m;
        std::set<std::string> img_fv;
        for (const auto& [v, img] : active) {
            auto fv = free_vars(img);
            img_fv.insert(fv.begin(), fv.end());
        }
        if (!img_fv.count(m->name))
            return sym_lam(m->name, m->ann, subst_many(m->a, active));
        std::set<std::string> avoid = img_fv;
        auto bfv = free_vars(m->a);
        avoid.insert(bfv.begin(), bfv.end());
        for (const auto& [v, img] : active)
            avoid.insert(v);
        avoid.insert(m->name);
        std::string fresh = fresh_name(avoid);
        std::map<std::string, SymTermPtr> rename{{m->name, sym_var(fresh)}};
        return sym_lam(fresh, m->ann, subst_many(subst_many(m->a, rename), active));
    }
    }
    structural_error("unreachable term kind");
}

SymTermPtr substitute(const SymTermPtr& m, const std::string& x, const SymTermPtr& n) {
    std::map<std::string, SymTermPtr> repl{{x, n}};
    return subst_many(m, repl);
}

SymTermPtr apply_sim_subst(const SymTermPtr& m, const SimSubstitution& s) {
    std::map<std::string, SymTermPtr> repl;
    for (const auto& e : s.entries)
        repl[e.var] = e.term; // later entries win on duplicate names
    return subst_many(m, repl);
}

int cxty_term(const SymTermPtr& m) {
    switch (m->kind) {
    case SymTerm::Kind::Var:
        return 0;
    case SymTerm::Kind::Pair:
    case SymTerm::Kind::Star:
        return cxty_term(m->a) + cxty_term(m->b);
    case SymTerm::Kind::Inj:
    case SymTerm::Kind::Lam:
        return 1 + cxty_term(m->a);
    }
    return 0;
}

namespace {

struct AlphaEnv {
    std::map<std::string, int> lhs, rhs;
    int next = 0;
};

bool alpha_rec(const SymTermPtr& m, const SymTermPtr& n, AlphaEnv& env) {
    if (m->kind != n->kind)
        return false;
    switch (m->kind) {
    case SymTerm::Kind::Var: {
        auto im = env.lhs.find(m->name);
        auto in = env.rhs.find(n->name);
        if (im == env.lhs.end() && in == env.rhs.end())
            return m->name == n->name;
        if (im != env.lhs.end() && in != env.rhs.end())
            return im->second == in->second;
        return false;
    }
    case SymTerm::Kind::Pair:
    case SymTerm::Kind::Star:
        return alpha_rec(m->a, n->a, env) && alpha_rec(m->b, n->b, env);
    case SymTerm::Kind::Inj:
        return m->side == n->side && type_eq(m->ann, n->ann) &&
               alpha_rec(m->a, n->a, env);
    case SymTerm::Kind::Lam: {
        if (!type_eq(m->ann, n->ann))
            return false;
        int id = env.next++;
        auto restore = [](std::map<std::string, int>& mm, const std::string& k,
                          bool had, int old) {
            if (had)
                mm[k] = old;
            else
                mm.erase(k);
        };
        auto im = env.lhs.find(m->name);
        bool hm = im != env.lhs.end();
        int om = hm ? im->second : 0;
        auto in = env.rhs.find(n->name);
        bool hn = in != env.rhs.end();
        int on = hn ? in->second : 0;
        env.lhs[m->name] = id;
        env.rhs[n->name] = id;
        bool ok = alpha_rec(m->a, n->a, env);
        restore(env.lhs, m->name, hm, om);
        restore(env.rhs, n->name, hn, on);
        return ok;
    }
    }
    return false;
}

bool equiv_rec(const SymTermPtr& m, const SymTermPtr& n, AlphaEnv& env) {
    if (m->kind != n->kind)
        return false;
    switch (m->kind) {
    case SymTerm::Kind::Var: {
        auto im = env.lhs.find(m->name);
        auto in = env.rhs.find(n->name);
        if (im == env.lhs.end() && in == env.rhs.end())
            return m->name == n->name;
        if (im != env.lhs.end() && in != env.rhs.end())
            return im->second == in->second;
        return false;
    }
    case SymTerm::Kind::Pair:
        return equiv_rec(m->a, n->a, env) && equiv_rec(m->b, n->b, env);
    case SymTerm::Kind::Star:
        if (equiv_rec(m->a, n->a, env) && equiv_rec(m->b, n->b, env))
            return true;
        return equiv_rec(m->a, n->b, env) && equiv_rec(m->b, n->a, env);
    case SymTerm::Kind::Inj:
        return m->side == n->side && type_eq(m->ann, n->ann) &&
               equiv_rec(m->a, n->a, env);
    case SymTerm::Kind::Lam: {
        if (!type_eq(m->ann, n->ann))
            return false;
        int id = env.next++;
        auto im = env.lhs.find(m->name);
        bool hm = im != env.lhs.end();
        int om = hm ? im->second : 0;
        auto in = env.rhs.find(n->name);
        bool hn = in != env.rhs.end();
        int on = hn ? in->second : 0;
        env.lhs[m->name] = id;
        env.rhs[n->name] = id;
        bool ok = equiv_rec(m->a, n->a, env);
        if (hm)
            env.lhs[m->name] = om;
        else
            env.lhs.erase(m->name);
        if (hn)
            env.rhs[n->name] = on;
        else
            env.rhs.erase(n->name);
        return ok;
    }
    }
    return false;
}

} // namespace

bool alpha_eq(const SymTermPtr& m, const SymTermPtr& n) {
    AlphaEnv env;
    return alpha_rec(m, n, env);
}

bool sym_equiv(const SymTermPtr& m, const SymTermPtr& n) {
    AlphaEnv env;
    return equiv_rec(m, n, env);
}

static void canon_rec(const SymTermPtr& m, std::map<std::string, int>& bound,
                      int& next, std::string& out) {
    switch (m->kind) {
    case SymTerm::Kind::Var: {
        auto it = bound.find(m->name);
        if (it != bound.end())
            out += "#" + std::to_string(it->second);
        else
            out += "$" + m->name;
        break;
    }
    case SymTerm::Kind::Pair:
        out += "<";
        canon_rec(m->a, bound, next, out);
        out += ",";
        canon_rec(m->b, bound, next, out);
        out += ">";
        break;
    case SymTerm::Kind::Star:
        out += "(";
        canon_rec(m->a, bound, next, out);
        out += "*";
        canon_rec(m->b, bound, next, out);
        out += ")";
        break;
    case SymTerm::Kind::Inj:
        out += "I" + std::to_string(m->side) + "[" + print_type(m->ann) + "](";
        canon_rec(m->a, bound, next, out);
        out += ")";
        break;
    case SymTerm::Kind::Lam: {
        out += "L[" + print_type(m->ann) + "]{";
        auto it = bound.find(m->name);
        bool had = it != bound.end();
        int old = had ? it->second : 0;
        bound[m->name] = next++;
        canon_rec(m->a, bound, next, out);
        if (had)
            bound[m->name] = old;
        else
            bound.erase(m->name);
        out += "}";
        break;
    }
    }
}

std::string canon_key(const SymTermPtr& m) {
    std::map<std::string, int> bound;
    int next = 0;
    std::string out;
    canon_rec(m, bound, next, out);
    return out;
}

static void print_rec(const SymTermPtr& m, std::string& out) {
    switch (m->kind) {
    case SymTerm::Kind::Var:
        out += m->name;
        break;
    case SymTerm::Kind::Pair:
        out += "<";
        print_rec(m->a, out);
        out += ", ";
        print_rec(m->b, out);
        out += ">";
        break;
    case SymTerm::Kind::Inj:
        out += (m->side == 1 ? "inl[" : "inr[");
        out += print_type(m->ann);
        out += "] ";
        print_rec(m->a, out);
        break;
    case SymTerm::Kind::Lam:
        out += "\\";
        out += m->name;
        out += ":";
        out += print_type(m->ann);
        out += ". ";
        print_rec(m->a, out);
        break;
    case SymTerm::Kind::Star:
        out += "(";
        print_rec(m->a, out);
        out += " * ";
        print_rec(m->b, out);
        out += ")";
        break;
    }
}

std::string print_term(const SymTermPtr& m) {
    if (!m)
        structural_error("null term");
    std::string out;
    print_rec(m, out);
    return out;
}

} // namespace symlog
