#pragma once

#include "symlog/sym_term.hpp"
#include "symlog/sym_type.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symlog {

// Ordered typing context. Binding an already-present name or a non-m-type
// throws; `extended` replaces on shadow and is what the typechecker uses
// when descending under a binder.
class SymContext {
public:
    SymContext() = default;

    const SymTypePtr* find(const std::string& x) const;
    bool contains(const std::string& x) const { return find(x) != nullptr; }
    void bind(const std::string& x, SymTypePtr a);
    SymContext extended(const std::string& x, SymTypePtr a) const;
    std::set<std::string> names() const;

    const std::vector<std::pair<std::string, SymTypePtr>>& items() const {
        return items_;
    }
    bool empty() const { return items_.empty(); }

private:
    std::vector<std::pair<std::string, SymTypePtr>> items_;
};

struct SymDerivation;
using SymDerivationPtr = std::shared_ptr<const SymDerivation>;

// One node per syntax node of the subject term: which rule concluded it,
// under which context, and at what type. Premises mirror the children.
struct SymDerivation {
    std::string rule; // var | pair | inj1 | inj2 | lam | star
    SymContext ctx;
    SymTermPtr term;
    SymTypePtr type;
    std::vector<SymDerivationPtr> premises;
};

struct SymTypeResult {
    SymTypePtr type;
    SymDerivationPtr derivation;
};

// Throws Error{Kind::Type} with a path-bearing message on failure.
SymTypeResult typecheck_sym(const SymContext& ctx, const SymTermPtr& m);

std::optional<SymTypeResult> try_type_sym(const SymContext& ctx, const SymTermPtr& m);

// Every substitution image must typecheck at the substitution's declared type
// under ctx, and every substituted variable must be declared at that type.
bool sim_subst_valid(const SymContext& ctx, const SimSubstitution& s);

// Checks that the type at every node of the derivation stays inside the
// closure of the root sequent's formulas (components of the formulas, plus
// duals of atoms that occur in them, combined under the connectives).
bool subformula_report(const SymDerivationPtr& d);

} // namespace symlog
