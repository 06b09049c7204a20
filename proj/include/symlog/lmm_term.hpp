#pragma once

#include "symlog/lmm_type.hpp"
#include "symlog/sym_term.hpp" // Path, fresh_name

#include <set>
#include <string>
#include <vector>

namespace symlog {

enum class LmmSort { C, L, R };

// One node type for all three sorts; constructors enforce the sort
// discipline so paths and printing stay uniform.
struct LmmTerm;
using LmmTermPtr = std::shared_ptr<const LmmTerm>;

struct LmmTerm {
    enum class Kind { Cut, LVar, Lam, Mu, BarE, RVar, Cons, MuTilde, TildeT };
    Kind kind;
    std::string name; // variable or binder name
    LmmTypePtr ann;   // binder annotation (Lam, Mu, MuTilde)
    LmmTermPtr a, b;
};

LmmSort lmm_sort(const LmmTermPtr& u);
LmmSort lmm_sort_of(LmmTerm::Kind k);

LmmTermPtr lmm_cut(LmmTermPtr t, LmmTermPtr e);
LmmTermPtr lmm_lvar(std::string x);
LmmTermPtr lmm_lam(std::string x, LmmTypePtr ann, LmmTermPtr body);
LmmTermPtr lmm_mu(std::string alpha, LmmTypePtr ann, LmmTermPtr body);
LmmTermPtr lmm_bar(LmmTermPtr e);
LmmTermPtr lmm_rvar(std::string alpha);
LmmTermPtr lmm_cons(LmmTermPtr head, LmmTermPtr tail);
LmmTermPtr lmm_mut(std::string x, LmmTypePtr ann, LmmTermPtr body);
LmmTermPtr lmm_tilde(LmmTermPtr t);

int child_count_lmm(const LmmTermPtr& u);
LmmTermPtr child_at_lmm(const LmmTermPtr& u, int i);
LmmTermPtr subterm_at_lmm(const LmmTermPtr& u, const Path& p);
LmmTermPtr replace_at_lmm(const LmmTermPtr& u, const Path& p, const LmmTermPtr& n);

std::set<std::string> fv_l(const LmmTermPtr& u);
std::set<std::string> fv_r(const LmmTermPtr& u);
int count_free_l(const LmmTermPtr& u, const std::string& x);
int count_free_r(const LmmTermPtr& u, const std::string& alpha);

// Capture-avoiding over both binder kinds.
LmmTermPtr subst_l(const LmmTermPtr& u, const std::string& x, const LmmTermPtr& t);
LmmTermPtr subst_r(const LmmTermPtr& u, const std::string& alpha, const LmmTermPtr& e);

// Alpha equivalence over both variable kinds; binder annotations are
// compared up to double-negation removal.
bool alpha_eq_lmm(const LmmTermPtr& u, const LmmTermPtr& v);

std::string canon_key_lmm(const LmmTermPtr& u);

// True iff the term avoids bar/tilde nodes and negation in annotations.
bool is_pure_lmm(const LmmTermPtr& u);

int cxty_lmm(const LmmTermPtr& u);

std::string print_lmm(const LmmTermPtr& u);

} // namespace symlog
