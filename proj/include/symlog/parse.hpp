#pragma once

#include "symlog/lmm_typing.hpp"
#include "symlog/sym_typing.hpp"

#include <string>

namespace symlog {

SymTypePtr parse_sym_type(const std::string& src);
SymTermPtr parse_sym_term(const std::string& src);
// Comma-separated "x:A" entries; empty input gives the empty context.
SymContext parse_sym_context(const std::string& src);

LmmTypePtr parse_lmm_type(const std::string& src);
LmmTermPtr parse_lmm_term(const std::string& src);
// "gamma |- delta", both zones comma-separated "x:A"; "|-" may be omitted
// when delta is empty.
LmmSequent parse_lmm_sequent(const std::string& src);

// A bare identifier parses as an l-variable by default; this flips it to an
// r-variable when only the delta zone declares the name.
LmmTermPtr lmm_resort_var(const LmmTermPtr& u, const LmmSequent& seq);

} // namespace symlog
