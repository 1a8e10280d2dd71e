#pragma once

#include <stdexcept>
#include <string>

namespace hilbzeta {

// Error taxonomy shared by the C++ core and the C API (which maps kinds to
// error codes).  Checks that are expected to fail as part of normal operation
// (functional equation, cross-checks, oracle fits) return report values
// instead of throwing.
class Error : public std::runtime_error {
public:
    enum class Kind {
        argument,        // bad argument / violated precondition
        ring_mismatch,   // mixing Lefschetz and weight ring values
        truncation,      // access beyond a series' truncation order
        degree,          // degree bound violated (Laurent substitution etc.)
        unknown_germ,    // germ has no stored local factor and no equation
        parse,           // germ equation / registry file syntax error
        not_polynomial,  // oracle counts do not fit an integer polynomial
        io,              // file I/O failure
    };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, std::string message) {
    throw Error(kind, std::move(message));
}

} // namespace hilbzeta
