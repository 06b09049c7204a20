#include "symlog/sym_typing.hpp"

#include "symlog/error.hpp"

#include <algorithm>
#include <map>

namespace symlog {

const SymTypePtr* SymContext::find(const std::string& x) const {
    for (const auto& [n, t] : items_)
        if (n == x)
            return &t;
    return nullptr;
}

void SymContext::bind(const std::string& x, SymTypePtr a) {
    if (contains(x))
        type_error("duplicate context entry for '" + x + "'");
    if (!is_m_type(a))
        type_error("context entry '" + x + "' must have an m-type, not #");
    items_.emplace_back(x, std::move(a));
}

SymContext SymContext::extended(const std::string& x, SymTypePtr a) const {
    if (!is_m_type(a))
        type_error("binder '" + x + "' must have an m-type, not #");
    SymContext out;
    bool replaced = false;
    for (const auto& [n, t] : items_) {
        if (n == x) {
            out.items_.emplace_back(n, a);
            replaced = true;
        } else {
            out.items_.emplace_back(n, t);
        }
    }
    if (!replaced)
        out.items_.emplace_back(x, std::move(a));
    return out;
}

std::set<std::string> SymContext::names() const {
    std::set<std::string> out;
    for (const auto& [n, t] : items_)
        out.insert(n);
    return out;
}

namespace {

std::string path_str(const Path& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); i++) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

SymDerivationPtr check_rec(const SymContext& ctx, const SymTermPtr& m, Path& at) {
    switch (m->kind) {
    case SymTerm::Kind::Var: {
        const SymTypePtr* t = ctx.find(m->name);
        if (!t)
            type_error("unbound variable '" + m->name + "' at " + path_str(at));
        auto d = std::make_shared<SymDerivation>();
        d->rule = "var";
        d->ctx = ctx;
        d->term = m;
        d->type = *t;
        return d;
    }
    case SymTerm::Kind::Pair: {
        at.push_back(0);
        auto d1 = check_rec(ctx, m->a, at);
        at.back() = 1;
        auto d2 = check_rec(ctx, m->b, at);
        at.pop_back();
        if (!is_m_type(d1->type) || !is_m_type(d2->type))
            type_error("pair component has type # at " + path_str(at));
        auto d = std::make_shared<SymDerivation>();
        d->rule = "pair";
        d->ctx = ctx;
        d->term = m;
        d->type = sym_and(d1->type, d2->type);
        d->premises = {d1, d2};
        return d;
    }
    case SymTerm::Kind::Inj: {
        at.push_back(0);
        auto d1 = check_rec(ctx, m->a, at);
        at.pop_back();
        if (!is_m_type(d1->type))
            type_error("injection body has type # at " + path_str(at));
        auto d = std::make_shared<SymDerivation>();
        d->rule = m->side == 1 ? "inj1" : "inj2";
        d->ctx = ctx;
        d->term = m;
        d->type = m->side == 1 ? sym_or(d1->type, m->ann)
                               : sym_or(m->ann, d1->type);
        d->premises = {d1};
        return d;
    }
    case SymTerm::Kind::Lam: {
        SymTermPtr body = m->a;
        std::string x = m->name;
        if (ctx.contains(x)) {
            // Freshen the binder so the extended context never shadows an
            // outer declaration inside the recorded derivation.
            std::set<std::string> avoid = ctx.names();
            auto bfv = free_vars(body);
            avoid.insert(bfv.begin(), bfv.end());
            avoid.insert(x);
            std::string fx = fresh_name(avoid);
            body = substitute(body, x, sym_var(fx));
            x = fx;
        }
        SymContext inner = ctx.extended(x, m->ann);
        at.push_back(0);
        auto d1 = check_rec(inner, body, at);
        at.pop_back();
        if (d1->type->kind != SymType::Kind::Bottom)
            type_error("lambda body must have type #, got " +
                       print_type(d1->type) + " at " + path_str(at));
        auto d = std::make_shared<SymDerivation>();
        d->rule = "lam";
        d->ctx = ctx;
        d->term = m;
        d->type = neg_type(m->ann);
        d->premises = {d1};
        return d;
    }
    case SymTerm::Kind::Star: {
        at.push_back(0);
        auto d1 = check_rec(ctx, m->a, at);
        at.back() = 1;
        auto d2 = check_rec(ctx, m->b, at);
        at.pop_back();
        if (!is_m_type(d1->type) || !is_m_type(d2->type))
            type_error("star component has type # at " + path_str(at));
        if (!type_eq(d1->type, neg_type(d2->type)))
            type_error("star components are not dual: " + print_type(d1->type) +
                       " vs " + print_type(d2->type) + " at " + path_str(at));
        auto d = std::make_shared<SymDerivation>();
        d->rule = "star";
        d->ctx = ctx;
        d->term = m;
        d->type = sym_bottom();
        d->premises = {d1, d2};
        return d;
    }
    }
    structural_error("unreachable term kind");
}

} // namespace

SymTypeResult typecheck_sym(const SymContext& ctx, const SymTermPtr& m) {
    if (!m)
        structural_error("null term");
    Path at;
    auto d = check_rec(ctx, m, at);
    return {d->type, d};
}

std::optional<SymTypeResult> try_type_sym(const SymContext& ctx, const SymTermPtr& m) {
    try {
        return typecheck_sym(ctx, m);
    } catch (const Error& e) {
        if (e.kind == Error::Kind::Type)
            return std::nullopt;
        throw;
    }
}

bool sim_subst_valid(const SymContext& ctx, const SimSubstitution& s) {
    if (!s.declared_type || !is_m_type(s.declared_type))
        return false;
    for (const auto& e : s.entries) {
        const SymTypePtr* declared = ctx.find(e.var);
        if (!declared || !type_eq(*declared, s.declared_type))
            return false;
        auto r = try_type_sym(ctx, e.term);
        if (!r || !type_eq(r->type, s.declared_type))
            return false;
    }
    return true;
}

namespace {

void collect_subformulas(const SymTypePtr& t,
                         std::map<std::string, SymTypePtr>& subs) {
    std::string key = print_type(t);
    if (subs.count(key))
        return;
    subs.emplace(std::move(key), t);
    if (t->kind == SymType::Kind::And || t->kind == SymType::Kind::Or) {
        collect_subformulas(t->left, subs);
        collect_subformulas(t->right, subs);
    }
}

void collect_atoms(const std::map<std::string, SymTypePtr>& subs,
                   std::set<std::string>& atoms) {
    for (const auto& [k, t] : subs)
        if (t->kind == SymType::Kind::Atom || t->kind == SymType::Kind::NegAtom)
            atoms.insert(t->name);
}

bool member(const SymTypePtr& t, const std::map<std::string, SymTypePtr>& subs,
            const std::set<std::string>& atoms) {
    if (t->kind == SymType::Kind::Bottom)
        return true;
    if (subs.count(print_type(t)))
        return true;
    switch (t->kind) {
    case SymType::Kind::Atom:
    case SymType::Kind::NegAtom:
        return atoms.count(t->name) > 0;
    case SymType::Kind::And:
    case SymType::Kind::Or:
        return member(t->left, subs, atoms) && member(t->right, subs, atoms);
    default:
        return false;
    }
}

bool walk_derivation(const SymDerivationPtr& d,
                     const std::map<std::string, SymTypePtr>& subs,
                     const std::set<std::string>& atoms) {
    if (!member(d->type, subs, atoms))
        return false;
    for (const auto& p : d->premises)
        if (!walk_derivation(p, subs, atoms))
            return false;
    return true;
}

} // namespace

bool subformula_report(const SymDerivationPtr& d) {
    if (!d)
        structural_error("null derivation");
    std::map<std::string, SymTypePtr> subs;
    for (const auto& [n, t] : d->ctx.items())
        collect_subformulas(t, subs);
    if (is_m_type(d->type))
        collect_subformulas(d->type, subs);
    std::set<std::string> atoms;
    collect_atoms(subs, atoms);
    return walk_derivation(d, subs, atoms);
}

} // namespace symlog
