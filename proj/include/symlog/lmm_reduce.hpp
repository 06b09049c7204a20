#pragma once

#include "symlog/lmm_term.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symlog {

enum class LmmRule { Lambda, Mu, MuTilde, SL, SR, Cl1L, Cl1R, Cl2 };

constexpr unsigned lmm_rule_bit(LmmRule r) { return 1u << static_cast<int>(r); }
constexpr unsigned kAllLmmRules = 0xFFu;

std::string lmm_rule_name(LmmRule r);
std::optional<LmmRule> lmm_rule_from_name(const std::string& s);

struct LmmRedexOccurrence {
    Path path;
    LmmRule rule = LmmRule::Lambda;
};

struct LmmStep {
    LmmRedexOccurrence occ;
    LmmTermPtr result;
};

struct LmmTrace {
    LmmTermPtr start;
    std::string status;
    std::vector<LmmStep> steps;

    LmmTermPtr end() const { return steps.empty() ? start : steps.back().result; }
    size_t length() const { return steps.size(); }
};

// Leftmost-outermost deterministic order; a cut of a mu against a mu-tilde
// yields both occurrences.
std::vector<LmmRedexOccurrence> find_redexes_lmm(const LmmTermPtr& u, unsigned rules);

LmmTermPtr reduce_at_lmm(const LmmTermPtr& u, const LmmRedexOccurrence& occ);

enum class LmmStrategy { LeftmostOutermost, RightmostInnermost, SeededRandom };

// Which of the two overlapping rules wins on a mu-against-mu-tilde cut under
// the deterministic strategies; the random strategy draws uniformly instead.
enum class MuOverlap { PriorityMu, PriorityMuTilde };

std::optional<LmmStrategy> lmm_strategy_from_name(const std::string& s);
std::optional<MuOverlap> mu_overlap_from_name(const std::string& s);

LmmTrace normalize_lmm(const LmmTermPtr& u, LmmStrategy strategy, long long fuel,
                       unsigned rules = kAllLmmRules,
                       MuOverlap overlap = MuOverlap::PriorityMuTilde,
                       std::uint64_t seed = 0);

} // namespace symlog
