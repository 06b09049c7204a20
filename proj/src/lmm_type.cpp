#include "symlog/lmm_type.hpp"

#include "symlog/error.hpp"

namespace symlog {

LmmTypePtr lmm_atom(std::string name) {
    auto t = std::make_shared<LmmType>();
    t->kind = LmmType::Kind::Atom;
    t->name = std::move(name);
    return t;
}

LmmTypePtr lmm_arrow(LmmTypePtr dom, LmmTypePtr cod) {
    if (!dom || !cod)
        structural_error("null arrow component");
    auto t = std::make_shared<LmmType>();
    t->kind = LmmType::Kind::Arrow;
    t->a = std::move(dom);
    t->b = std::move(cod);
    return t;
}

LmmTypePtr lmm_neg(LmmTypePtr inner) {
    if (!inner)
        structural_error("null negation body");
    auto t = std::make_shared<LmmType>();
    t->kind = LmmType::Kind::Neg;
    t->a = std::move(inner);
    return t;
}

LmmTypePtr canonicalize_type(const LmmTypePtr& t) {
    switch (t->kind) {
    case LmmType::Kind::Atom:
        return t;
    case LmmType::Kind::Arrow: {
        LmmTypePtr d = canonicalize_type(t->a);
        LmmTypePtr c = canonicalize_type(t->b);
        if (d == t->a && c == t->b)
            return t;
        return lmm_arrow(d, c);
    }
    case LmmType::Kind::Neg: {
        LmmTypePtr inner = canonicalize_type(t->a);
        if (inner->kind == LmmType::Kind::Neg)
            return inner->a;
        if (inner == t->a)
            return t;
        return lmm_neg(inner);
    }
    }
    structural_error("unreachable type kind");
}

static bool eq_canon(const LmmTypePtr& x, const LmmTypePtr& y) {
    if (x == y)
        return true;
    if (x->kind != y->kind)
        return false;
    switch (x->kind) {
    case LmmType::Kind::Atom:
        return x->name == y->name;
    case LmmType::Kind::Arrow:
        return eq_canon(x->a, y->a) && eq_canon(x->b, y->b);
    case LmmType::Kind::Neg:
        return eq_canon(x->a, y->a);
    }
    return false;
}

bool lmm_type_eq(const LmmTypePtr& x, const LmmTypePtr& y) {
    return eq_canon(canonicalize_type(x), canonicalize_type(y));
}

int cxty_lmm_type(const LmmTypePtr& t) {
    switch (t->kind) {
    case LmmType::Kind::Atom:
        return 0;
    case LmmType::Kind::Arrow:
        return 1 + cxty_lmm_type(t->a) + cxty_lmm_type(t->b);
    case LmmType::Kind::Neg:
        return cxty_lmm_type(t->a);
    }
    return 0;
}

// Precedence: arrow 1 (right-associative), negation 2, atoms 3.
static void print_rec(const LmmTypePtr& t, int min_prec, std::string& out) {
    switch (t->kind) {
    case LmmType::Kind::Atom:
        out += t->name;
        return;
    case LmmType::Kind::Arrow: {
        bool paren = min_prec > 1;
        if (paren)
            out += "(";
        print_rec(t->a, 2, out);
        out += " -> ";
        print_rec(t->b, 1, out);
        if (paren)
            out += ")";
        return;
    }
    case LmmType::Kind::Neg:
        out += "~";
        print_rec(t->a, 2, out);
        return;
    }
}

std::string print_lmm_type(const LmmTypePtr& t) {
    if (!t)
        structural_error("null type");
    std::string out;
    print_rec(t, 0, out);
    return out;
}

} // namespace symlog
