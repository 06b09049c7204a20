#pragma once

#include "symlog/gen.hpp"
#include "symlog/lmm_reduce.hpp"
#include "symlog/sym_reduce.hpp"
#include "symlog/verify.hpp"

#include <string>

namespace symlog {

// Stable JSON renderings for the CLI: object keys are emitted in sorted
// order, so equal inputs produce byte-identical output.
std::string trace_json_sym(const ReductionTrace& tr);
std::string trace_json_lmm(const LmmTrace& tr);
std::string suite_json(const SuiteResult& r);
std::string gen_json_sym(const GenSym& g);
std::string gen_json_lmm(const GenLmm& g);

} // namespace symlog
