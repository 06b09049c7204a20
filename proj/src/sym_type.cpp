#include "symlog/sym_type.hpp"

#include "symlog/error.hpp"

namespace symlog {

SymTypePtr sym_atom(std::string name) {
    auto t = std::make_shared<SymType>();
    t->kind = SymType::Kind::Atom;
    t->name = std::move(name);
    return t;
}

SymTypePtr sym_neg_atom(std::string name) {
    auto t = std::make_shared<SymType>();
    t->kind = SymType::Kind::NegAtom;
    t->name = std::move(name);
    return t;
}

static SymTypePtr make_bin(SymType::Kind k, SymTypePtr l, SymTypePtr r) {
    if (!l || !r)
        structural_error("null component in type constructor");
    if (!is_m_type(l) || !is_m_type(r))
        structural_error("# cannot appear under /\\ or \\/");
    auto t = std::make_shared<SymType>();
    t->kind = k;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

SymTypePtr sym_and(SymTypePtr l, SymTypePtr r) {
    return make_bin(SymType::Kind::And, std::move(l), std::move(r));
}

SymTypePtr sym_or(SymTypePtr l, SymTypePtr r) {
    return make_bin(SymType::Kind::Or, std::move(l), std::move(r));
}

SymTypePtr sym_bottom() {
    static const SymTypePtr bot = [] {
        auto t = std::make_shared<SymType>();
        t->kind = SymType::Kind::Bottom;
        return t;
    }();
    return bot;
}

bool is_m_type(const SymTypePtr& a) {
    return a && a->kind != SymType::Kind::Bottom;
}

bool type_eq(const SymTypePtr& a, const SymTypePtr& b) {
    if (a.get() == b.get())
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case SymType::Kind::Atom:
    case SymType::Kind::NegAtom:
        return a->name == b->name;
    case SymType::Kind::And:
    case SymType::Kind::Or:
        return type_eq(a->left, b->left) && type_eq(a->right, b->right);
    case SymType::Kind::Bottom:
        return true;
    }
    return false;
}

SymTypePtr neg_type(const SymTypePtr& a) {
    if (!is_m_type(a))
        type_error("negation defined on m-types only");
    switch (a->kind) {
    case SymType::Kind::Atom:
        return sym_neg_atom(a->name);
    case SymType::Kind::NegAtom:
        return sym_atom(a->name);
    case SymType::Kind::And:
        return sym_or(neg_type(a->left), neg_type(a->right));
    case SymType::Kind::Or:
        return sym_and(neg_type(a->left), neg_type(a->right));
    default:
        break;
    }
    type_error("negation defined on m-types only");
}

int cxty_type(const SymTypePtr& a) {
    if (!a)
        structural_error("null type");
    switch (a->kind) {
    case SymType::Kind::And:
    case SymType::Kind::Or:
        return 1 + cxty_type(a->left) + cxty_type(a->right);
    default:
        return 0;
    }
}

// Precedence: \/ = 1, /\ = 2, atoms = 3; both connectives print
// left-associated, matching the parser.
static void print_rec(const SymTypePtr& a, int min_prec, std::string& out) {
    int prec;
    switch (a->kind) {
    case SymType::Kind::Or: prec = 1; break;
    case SymType::Kind::And: prec = 2; break;
    default: prec = 3; break;
    }
    bool parens = prec < min_prec;
    if (parens)
        out += "(";
    switch (a->kind) {
    case SymType::Kind::Atom:
        out += a->name;
        break;
    case SymType::Kind::NegAtom:
        out += "~";
        out += a->name;
        break;
    case SymType::Kind::Bottom:
        out += "#";
        break;
    case SymType::Kind::Or:
        print_rec(a->left, 1, out);
        out += " \\/ ";
        print_rec(a->right, 2, out);
        break;
    case SymType::Kind::And:
        print_rec(a->left, 2, out);
        out += " /\\ ";
        print_rec(a->right, 3, out);
        break;
    }
    if (parens)
        out += ")";
}

std::string print_type(const SymTypePtr& a) {
    if (!a)
        structural_error("null type");
    std::string out;
    print_rec(a, 0, out);
    return out;
}

} // namespace symlog
