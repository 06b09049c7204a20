#pragma once

#include "symlog/sym_term.hpp"
#include "symlog/sym_typing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symlog {

enum class SymRule { Beta, BetaBot, Eta, EtaBot, Pi, PiBot, Triv };

constexpr unsigned rule_bit(SymRule r) { return 1u << static_cast<int>(r); }

constexpr unsigned kAllSymRules = 0x7Fu;
constexpr unsigned kBetaPiRules = rule_bit(SymRule::Beta) | rule_bit(SymRule::BetaBot) |
                                  rule_bit(SymRule::Pi) | rule_bit(SymRule::PiBot);
constexpr unsigned kERules = rule_bit(SymRule::Eta) | rule_bit(SymRule::EtaBot);
constexpr unsigned kBetaPiEtaRules = kBetaPiRules | kERules;

std::string sym_rule_name(SymRule r);
std::optional<SymRule> sym_rule_from_name(const std::string& s);

// For Triv, `path` addresses the enclosing term that gets discarded and
// `keep` is the relative path of the surviving subterm; `keep` is empty for
// every other rule. `linear` is meaningful on Beta/BetaBot only and marks
// that the bound variable occurs at most once in the body.
struct RedexOccurrence {
    Path path;
    SymRule rule = SymRule::Beta;
    Path keep;
    bool linear = false;
};

struct SymStep {
    RedexOccurrence occ;
    SymTermPtr result;
};

struct ReductionTrace {
    SymTermPtr start;
    std::string status; // ok | normal-form | fuel-exhausted | partial
    std::vector<SymStep> steps;

    SymTermPtr end() const { return steps.empty() ? start : steps.back().result; }
    size_t length() const { return steps.size(); }
};

// Occurrences in leftmost-outermost order (path lexicographic, prefix first;
// rule order then keep order at equal paths). Requesting Triv without a
// typing derivation is a usage error.
std::vector<RedexOccurrence> find_redexes(const SymTermPtr& m,
                                          const SymDerivationPtr& typing,
                                          unsigned rules);

// Applies one rule instance; throws a structural error if the occurrence
// does not match the term.
SymTermPtr reduce_at(const SymTermPtr& m, const RedexOccurrence& occ);

enum class SymStrategy { LeftmostOutermost, RightmostInnermost, SeededRandom };

std::optional<SymStrategy> sym_strategy_from_name(const std::string& s);

// Repeatedly selects an occurrence under the strategy until no rule applies
// or fuel runs out. Triv fires only when a typing derivation is supplied;
// intermediate terms are re-checked under the derivation's root context.
ReductionTrace normalize(const SymTermPtr& m, const SymDerivationPtr& typing,
                         SymStrategy strategy, long long fuel,
                         unsigned rules = kAllSymRules, std::uint64_t seed = 0);

} // namespace symlog
