#include "symlog/lmm_typing.hpp"

#include "symlog/error.hpp"

namespace symlog {

namespace {

const LmmTypePtr* find_in(const std::vector<std::pair<std::string, LmmTypePtr>>& zone,
                          const std::string& x) {
    for (const auto& [n, t] : zone)
        if (n == x)
            return &t;
    return nullptr;
}

void bind_in(std::vector<std::pair<std::string, LmmTypePtr>>& zone, const std::string& x,
             LmmTypePtr a, const char* side) {
    if (find_in(zone, x))
        type_error(std::string("duplicate ") + side + " entry for '" + x + "'");
    zone.emplace_back(x, std::move(a));
}

void extend_in(std::vector<std::pair<std::string, LmmTypePtr>>& zone,
               const std::string& x, LmmTypePtr a) {
    for (auto& [n, t] : zone)
        if (n == x) {
            t = std::move(a);
            return;
        }
    zone.emplace_back(x, std::move(a));
}

} // namespace

const LmmTypePtr* LmmSequent::find_l(const std::string& x) const {
    return find_in(gamma_, x);
}

const LmmTypePtr* LmmSequent::find_r(const std::string& alpha) const {
    return find_in(delta_, alpha);
}

void LmmSequent::bind_l(const std::string& x, LmmTypePtr a) {
    bind_in(gamma_, x, std::move(a), "left");
}

void LmmSequent::bind_r(const std::string& alpha, LmmTypePtr a) {
    bind_in(delta_, alpha, std::move(a), "right");
}

LmmSequent LmmSequent::extended_l(const std::string& x, LmmTypePtr a) const {
    LmmSequent out = *this;
    extend_in(out.gamma_, x, std::move(a));
    return out;
}

LmmSequent LmmSequent::extended_r(const std::string& alpha, LmmTypePtr a) const {
    LmmSequent out = *this;
    extend_in(out.delta_, alpha, std::move(a));
    return out;
}

std::set<std::string> LmmSequent::names() const {
    std::set<std::string> out;
    for (const auto& [n, t] : gamma_)
        out.insert(n);
    for (const auto& [n, t] : delta_)
        out.insert(n);
    return out;
}

namespace {

// Renames the binder when it shadows a sequent entry so the extended
// sequent never holds two bindings of one name.
std::pair<std::string, LmmTermPtr> freshen_binder(const LmmSequent& seq,
                                                  const LmmTermPtr& u, bool l_kind) {
    std::string x = u->name;
    LmmTermPtr body = u->a;
    bool taken = l_kind ? seq.find_l(x) != nullptr : seq.find_r(x) != nullptr;
    if (taken) {
        std::set<std::string> avoid = seq.names();
        auto bl = fv_l(body);
        auto br = fv_r(body);
        avoid.insert(bl.begin(), bl.end());
        avoid.insert(br.begin(), br.end());
        avoid.insert(x);
        std::string fx = fresh_name(avoid);
        body = l_kind ? subst_l(body, x, lmm_lvar(fx)) : subst_r(body, x, lmm_rvar(fx));
        x = fx;
    }
    return {x, body};
}

LmmTypePtr check(const LmmSequent& seq, const LmmTermPtr& u);

void check_cut(const LmmSequent& seq, const LmmTermPtr& u) {
    LmmTypePtr lt = check(seq, u->a);
    LmmTypePtr rt = check(seq, u->b);
    if (!lmm_type_eq(lt, rt))
        type_error("cut type mismatch: " + print_lmm_type(lt) + " vs " +
                   print_lmm_type(rt));
}

LmmTypePtr check(const LmmSequent& seq, const LmmTermPtr& u) {
    switch (u->kind) {
    case LmmTerm::Kind::LVar: {
        const LmmTypePtr* t = seq.find_l(u->name);
        if (!t)
            type_error("unbound l-variable '" + u->name + "'");
        return *t;
    }
    case LmmTerm::Kind::RVar: {
        const LmmTypePtr* t = seq.find_r(u->name);
        if (!t)
            type_error("unbound r-variable '" + u->name + "'");
        return *t;
    }
    case LmmTerm::Kind::Lam: {
        auto [x, body] = freshen_binder(seq, u, true);
        LmmTypePtr bt = check(seq.extended_l(x, u->ann), body);
        return lmm_arrow(u->ann, bt);
    }
    case LmmTerm::Kind::Mu: {
        auto [alpha, body] = freshen_binder(seq, u, false);
        check_cut(seq.extended_r(alpha, u->ann), body);
        return u->ann;
    }
    case LmmTerm::Kind::MuTilde: {
        auto [x, body] = freshen_binder(seq, u, true);
        check_cut(seq.extended_l(x, u->ann), body);
        return u->ann;
    }
    case LmmTerm::Kind::BarE:
    case LmmTerm::Kind::TildeT:
        return lmm_neg(check(seq, u->a));
    case LmmTerm::Kind::Cons: {
        LmmTypePtr ht = check(seq, u->a);
        LmmTypePtr tt = check(seq, u->b);
        return lmm_arrow(ht, tt);
    }
    case LmmTerm::Kind::Cut:
        type_error("a command has no type; check it as a command");
    }
    structural_error("unreachable term kind");
}

} // namespace

std::optional<LmmTypePtr> typecheck_lmm(const LmmSequent& seq, const LmmTermPtr& u) {
    if (!u)
        structural_error("null term");
    if (u->kind == LmmTerm::Kind::Cut) {
        check_cut(seq, u);
        return std::nullopt;
    }
    return check(seq, u);
}

std::optional<std::optional<LmmTypePtr>> try_type_lmm(const LmmSequent& seq,
                                                      const LmmTermPtr& u) {
    try {
        return typecheck_lmm(seq, u);
    } catch (const Error& e) {
        if (e.kind == Error::Kind::Type)
            return std::nullopt;
        throw;
    }
}

} // namespace symlog
