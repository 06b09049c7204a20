#pragma once

#include "symlog/sym_reduce.hpp"

#include <optional>

namespace symlog {

// Reorders a trace of eta-family steps followed by computation steps into
// computation steps first, then eta-family steps, with the same endpoints up
// to renaming. Wrong-shape input is a usage error; the rare inputs with no
// exact reordering (an eta step sitting crosswise in a projection slot) are
// a structural error after the search fallback gives up.
ReductionTrace postpone_e(const ReductionTrace& trace);

// Reorders triv steps followed by a single computation or eta step so the
// non-triv step comes first. The context, when given, lets the search
// fallback enumerate triv occurrences; the constructive path never needs it.
ReductionTrace postpone_triv(const ReductionTrace& trace,
                             const std::optional<SymContext>& ctx = std::nullopt);

// Bounded exhaustive search for a reordering of the trace: a nonempty phase
// of first_rules steps, then second_rules steps, ending at the trace's
// endpoint. With up_to_star_swap the endpoint may differ in star child order.
// The depth bound matches the postponement fallback, so an empty result
// confirms a postponement refusal rather than a search miss. The context is
// only needed when a phase includes triv.
std::optional<ReductionTrace>
search_reordering(const ReductionTrace& trace, unsigned first_rules,
                  unsigned second_rules, bool up_to_star_swap,
                  const std::optional<SymContext>& ctx = std::nullopt);

} // namespace symlog
