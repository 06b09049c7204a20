#pragma once

#include "symlog/lmm_term.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symlog {

// Two-zone sequent: gamma types l-variables, delta types r-variables.
// Each zone rejects duplicate names; binders extend by replacement.
class LmmSequent {
public:
    LmmSequent() = default;

    const LmmTypePtr* find_l(const std::string& x) const;
    const LmmTypePtr* find_r(const std::string& alpha) const;
    void bind_l(const std::string& x, LmmTypePtr a);
    void bind_r(const std::string& alpha, LmmTypePtr a);
    LmmSequent extended_l(const std::string& x, LmmTypePtr a) const;
    LmmSequent extended_r(const std::string& alpha, LmmTypePtr a) const;
    std::set<std::string> names() const;

    const std::vector<std::pair<std::string, LmmTypePtr>>& gamma() const {
        return gamma_;
    }
    const std::vector<std::pair<std::string, LmmTypePtr>>& delta() const {
        return delta_;
    }

private:
    std::vector<std::pair<std::string, LmmTypePtr>> gamma_, delta_;
};

// l- and r-terms return their type as written (not canonicalized); a
// well-typed c-term returns nullopt. Ill-typed input throws.
std::optional<LmmTypePtr> typecheck_lmm(const LmmSequent& seq, const LmmTermPtr& u);

std::optional<std::optional<LmmTypePtr>> try_type_lmm(const LmmSequent& seq,
                                                      const LmmTermPtr& u);

} // namespace symlog
