#pragma once

#include "symlog/lmm_reduce.hpp"
#include "symlog/lmm_typing.hpp"
#include "symlog/sym_reduce.hpp"
#include "symlog/sym_typing.hpp"

#include <optional>
#include <string>

namespace symlog {

// Name an r-variable takes on the propositional side. The '!' prefix is
// rejected by the parsers, so these never collide with user-written names.
std::string negated_name(const std::string& alpha);

// Computational types/terms to propositional ones. Arrow types canonicalize
// before translating; term_e needs the sequent to recover body types at
// lambda nodes, and turns commands into stars.
SymTypePtr type_e(const LmmTypePtr& a);
SymContext context_e(const LmmSequent& seq);
SymTermPtr term_e(const LmmSequent& seq, const LmmTermPtr& u);

// Propositional to computational. type_f rejects Bottom; bottom-typed terms
// map to commands. term_f consults the context to type injection arguments.
LmmTypePtr type_f(const SymTypePtr& a);
LmmSequent context_f(const SymContext& ctx);
LmmTermPtr term_f(const SymContext& ctx, const SymTermPtr& m);

// Direct composite translation; the target of roundtrip_ef.
LmmTermPtr bigT(const LmmSequent& seq, const LmmTermPtr& u);

// Evidence that one source step is matched on the other side: either a
// nonempty target trace (method "chain" when the planned rule sequence
// worked, "search" when breadth-first search found one) or an equivalence
// witness (method "equiv", for the administrative rules).
struct SimVerdict {
    std::string source_rule;
    std::string status; // pass | fail
    std::string method; // chain | search | equiv
    std::string message;
    std::optional<ReductionTrace> sym_trace;
    std::optional<LmmTrace> lmm_trace;

    bool pass() const { return status == "pass"; }
};

SimVerdict check_sim_e(const LmmSequent& seq, const LmmTermPtr& v,
                       const LmmRedexOccurrence& occ, int search_budget = 64);
SimVerdict check_sim_f(const SymContext& ctx, const SymTermPtr& m,
                       const RedexOccurrence& occ, int search_budget = 64);

// f then e returns to the original term; e then f reaches bigT. Both replay
// per-constructor step plans and validate endpoints up to renaming; nullopt
// when the plan exceeds the budget or the endpoints disagree.
std::optional<ReductionTrace> roundtrip_fe(const SymContext& ctx,
                                           const SymTermPtr& m, int budget);
std::optional<LmmTrace> roundtrip_ef(const LmmSequent& seq, const LmmTermPtr& u,
                                     int budget);

// Translation commutes with substitution, up to renaming. The caller
// supplies typed inputs with x (or alpha) declared at the image's type.
bool subst_commutes_f(const SymContext& ctx, const SymTermPtr& m,
                      const std::string& x, const SymTermPtr& n);
bool subst_commutes_e_l(const LmmSequent& seq, const LmmTermPtr& u,
                        const std::string& x, const LmmTermPtr& t);
bool subst_commutes_e_r(const LmmSequent& seq, const LmmTermPtr& u,
                        const std::string& alpha, const LmmTermPtr& e);

} // namespace symlog
