#pragma once

#include "symlog/sym_type.hpp"

#include <set>
#include <string>
#include <vector>

namespace symlog {

struct SymTerm;
using SymTermPtr = std::shared_ptr<const SymTerm>;

// Child-index path from the root of a term.
using Path = std::vector<int>;

struct SymTerm {
    enum class Kind { Var, Pair, Inj, Lam, Star };
    Kind kind;
    std::string name; // Var; Lam binder
    SymTypePtr ann;   // Inj: the absent disjunct; Lam: binder type
    int side = 0;     // Inj: 1 or 2
    SymTermPtr a, b;  // Pair(a,b), Inj(a), Lam(a = body), Star(a,b)
};

SymTermPtr sym_var(std::string x);
SymTermPtr sym_pair(SymTermPtr p1, SymTermPtr p2);
SymTermPtr sym_inj(int side, SymTypePtr other, SymTermPtr body);
SymTermPtr sym_lam(std::string x, SymTypePtr ann, SymTermPtr body);
SymTermPtr sym_star(SymTermPtr l, SymTermPtr r);

int child_count(const SymTermPtr& m);
SymTermPtr child_at(const SymTermPtr& m, int i);
SymTermPtr subterm_at(const SymTermPtr& m, const Path& p);
SymTermPtr replace_at(const SymTermPtr& m, const Path& p, const SymTermPtr& n);

std::set<std::string> free_vars(const SymTermPtr& m);
int count_free(const SymTermPtr& m, const std::string& x);
// Paths of the free occurrences of x (preorder), respecting shadowing.
std::vector<Path> free_positions(const SymTermPtr& m, const std::string& x);

// Smallest x0, x1, ... not in avoid.
std::string fresh_name(const std::set<std::string>& avoid);

SymTermPtr substitute(const SymTermPtr& m, const std::string& x, const SymTermPtr& n);

// Simultaneous substitution [x1:=N1, ..., xk:=Nk]. The declared type is the
// common type of the images (validated separately against a context).
struct SimSubstitution {
    struct Entry {
        std::string var;
        SymTermPtr term;
    };
    std::vector<Entry> entries;
    SymTypePtr declared_type;
};

SymTermPtr apply_sim_subst(const SymTermPtr& m, const SimSubstitution& s);

int cxty_term(const SymTermPtr& m);
bool alpha_eq(const SymTermPtr& m, const SymTermPtr& n);

// Equality up to swapping the two arguments of any Star, plus alpha.
bool sym_equiv(const SymTermPtr& m, const SymTermPtr& n);

// Alpha-invariant serialization; equal strings iff alpha-equal terms.
std::string canon_key(const SymTermPtr& m);

// Concrete syntax: x, <P, Q>, inl[B] P, inr[A] P, \x:A. P, (P * Q).
std::string print_term(const SymTermPtr& m);

} // namespace symlog
