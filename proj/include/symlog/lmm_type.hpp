#pragma once

#include <memory>
#include <string>

namespace symlog {

struct LmmType;
using LmmTypePtr = std::shared_ptr<const LmmType>;

// Negation is a first-class constructor, normalized lazily: comparisons go
// through canonicalize_type, construction and printing keep user shape.
struct LmmType {
    enum class Kind { Atom, Arrow, Neg };
    Kind kind;
    std::string name; // Atom
    LmmTypePtr a, b;  // Arrow domain/codomain; Neg inner in a
};

LmmTypePtr lmm_atom(std::string name);
LmmTypePtr lmm_arrow(LmmTypePtr dom, LmmTypePtr cod);
LmmTypePtr lmm_neg(LmmTypePtr inner);

// Removes every double negation; idempotent.
LmmTypePtr canonicalize_type(const LmmTypePtr& t);

bool lmm_type_eq(const LmmTypePtr& x, const LmmTypePtr& y);

// Arrow count; negation is transparent.
int cxty_lmm_type(const LmmTypePtr& t);

std::string print_lmm_type(const LmmTypePtr& t);

} // namespace symlog
