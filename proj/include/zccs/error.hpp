#pragma once

#include <stdexcept>
#include <string>

namespace zccs {

/// Construction parameters that cannot produce a valid code set.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed code-set, report or CSV input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zccs
