#pragma once

#include "symlog/lmm_typing.hpp"
#include "symlog/sym_typing.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symlog {

struct GenConfig {
    std::uint64_t seed = 0;
    int max_size = 20; // term node budget
    std::vector<std::string> atom_pool = {"a", "b", "c"};
    // Probability of a bottom-typed subject (propositional side) or of a
    // command at the root (computational side).
    double bottom_bias = 0.3;
};

struct GenSym {
    SymContext ctx;
    SymTermPtr term;
    SymTypePtr type;
};

struct GenLmm {
    LmmSequent seq;
    LmmTermPtr term;
};

// Both generators build a random derivation top-down, so every output
// typechecks. Deterministic per seed. Dead ends retry up to 1000 times;
// exceeding that bound throws, since it means the cost accounting is wrong.
GenSym gen_sym(const GenConfig& cfg);
GenLmm gen_lmm(const GenConfig& cfg);

using SymPredicate = std::function<bool(const SymContext&, const SymTermPtr&)>;
using LmmPredicate = std::function<bool(const LmmSequent&, const LmmTermPtr&)>;

struct ShrunkSym {
    SymContext ctx;
    SymTermPtr term;
};

struct ShrunkLmm {
    LmmSequent seq;
    LmmTermPtr term;
};

// Greedy minimization of a failing input: hoist a closed subterm to the
// root, or replace a subterm by a fresh variable of its type (declared in
// the returned context). Runs until no candidate keeps the predicate
// failing; the predicate must fail on the input.
ShrunkSym shrink_sym(const SymContext& ctx, const SymTermPtr& term,
                     const SymPredicate& failing);
ShrunkLmm shrink_lmm(const LmmSequent& seq, const LmmTermPtr& term,
                     const LmmPredicate& failing);

} // namespace symlog
