#pragma once

#include <stdexcept>
#include <string>

namespace klines {

// Two independent computations of the same quantity disagreed, or an exact
// identity failed. Always a bug or a broken precondition upstream; the CLI
// maps it to exit status 2.
class VerificationError : public std::logic_error {
public:
    explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace klines
