#pragma once

#include <stdexcept>
#include <string>

namespace symlog {

// One exception type for the whole library; `kind` maps onto the CLI's
// exit-status buckets (parse/type -> 2, budget -> 3).
struct Error : std::runtime_error {
    enum class Kind { Parse, Type, Usage, Structural, Budget };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void parse_error(const std::string& msg) {
    throw Error(Error::Kind::Parse, msg);
}
[[noreturn]] inline void type_error(const std::string& msg) {
    throw Error(Error::Kind::Type, msg);
}
[[noreturn]] inline void usage_error(const std::string& msg) {
    throw Error(Error::Kind::Usage, msg);
}
[[noreturn]] inline void structural_error(const std::string& msg) {
    throw Error(Error::Kind::Structural, msg);
}
[[noreturn]] inline void budget_error(const std::string& msg) {
    throw Error(Error::Kind::Budget, msg);
}

} // namespace symlog
