#pragma once

#include "symlog/sym_reduce.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symlog {

struct SNReport {
    std::string status; // normalizing | fuel-exhausted | cycle-found
    std::optional<long long> eta; // longest reduction length, when complete
    int cxty = 0;
    std::optional<ReductionTrace> witness; // a maximal-length reduction
};

// Exhaustive memoized search of the reduction graph under the four
// computation rules only. Budget counts distinct visited terms (up to
// renaming of bound variables). Cycles are possible only for untyped input.
SNReport longest_reduction_betapi(const SymTermPtr& m, long long budget = 1000000);

struct ZoomInSequence {
    std::vector<SymTermPtr> redexes;
};

struct ZoomInReport {
    bool structural = false;
    std::string minimal; // pass | fail | inconclusive
};

// structural: every entry is a redex at the root and each successor occurs,
// up to renaming, inside some one-step root contraction of its predecessor.
// minimal: every entry is a star whose halves normalize on their own while
// the star itself does not.
ZoomInReport validate_zoomin(const ZoomInSequence& seq, long long sn_budget = 1000000);

} // namespace symlog
