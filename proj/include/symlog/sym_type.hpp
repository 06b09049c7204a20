#pragma once

#include <memory>
#include <string>

namespace symlog {

struct SymType;
using SymTypePtr = std::shared_ptr<const SymType>;

// m-types are atoms, negated atoms, /\ and \/. Bottom (#) is the lone
// non-m type; the constructors refuse to place it under a connective.
struct SymType {
    enum class Kind { Atom, NegAtom, And, Or, Bottom };
    Kind kind;
    std::string name;       // Atom, NegAtom
    SymTypePtr left, right; // And, Or
};

SymTypePtr sym_atom(std::string name);
SymTypePtr sym_neg_atom(std::string name);
SymTypePtr sym_and(SymTypePtr l, SymTypePtr r);
SymTypePtr sym_or(SymTypePtr l, SymTypePtr r);
SymTypePtr sym_bottom();

bool is_m_type(const SymTypePtr& a);
bool type_eq(const SymTypePtr& a, const SymTypePtr& b);

// de Morgan dual; involutive on m-types, rejects Bottom.
SymTypePtr neg_type(const SymTypePtr& a);

// 0 on atoms and Bottom, 1 + sum on connectives.
int cxty_type(const SymTypePtr& a);

// Concrete syntax: a, ~a, A /\ B, A \/ B, # (with /\ binding tighter).
std::string print_type(const SymTypePtr& a);

} // namespace symlog
