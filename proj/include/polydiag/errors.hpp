#pragma once

#include <stdexcept>
#include <string>

namespace polydiag {

/// Bad input: malformed partitions, mismatched ground sets, out-of-range
/// arguments, invalid JSON. Maps to CLI exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal identity failed: a division that must be exact left a
/// remainder, or a cross-checked sum disagreed. Signals a formula bug,
/// never bad user input. Maps to CLI exit code 2.
class identity_error : public std::runtime_error {
public:
    explicit identity_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace polydiag
