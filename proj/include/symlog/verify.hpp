#pragma once

#include "symlog/gen.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symlog {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int samples = 100;
    int max_size = 20;
    long long fuel = 100000;
    long long budget = 1000000; // longest-reduction search budget
    int search_budget = 64;     // simulation fallback search
};

struct SuiteResult {
    std::string suite;
    int passed = 0;
    int failed = 0;
    int skipped = 0; // samples the suite does not apply to
    // Samples where the checked reordering provably does not exist: the
    // refusal is confirmed by exhaustive search, and the reordering does
    // exist up to star child order. Reported separately so they are neither
    // hidden as passes nor miscounted as implementation failures.
    int counterexamples = 0;
    std::vector<std::string> messages; // first few failure details

    int total() const { return passed + failed + skipped + counterexamples; }
    bool ok() const { return failed == 0; }
};

// preservation     every enabled one-step reduct keeps its type
// sn               three normalization strategies finish within fuel, and
//                  the longest-reduction search completes without cycles
// subst_closure    longest reduction stays finite under substitution
// postpone         eta-family steps move past computation steps
// postpone_triv    pruning steps move past computation and eta steps
// sim_e            computational steps map to propositional traces
// sim_f            computation rules map to fixed-length reverse traces
// roundtrip        f;e returns to the source, e;f reaches the composite image
// transport        translated terms typecheck at the translated type
// subformula       typed normal forms satisfy the subformula property
// nonconfluence    the mu / mu-tilde critical pair keeps two normal forms
// monotonicity     each computation step drops the longest-reduction measure
// subst_lemmas     translations commute with substitution
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt);

} // namespace symlog
