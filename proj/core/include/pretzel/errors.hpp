#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

// Invalid arguments: bad pretzel parameters, malformed braid text, spans of
// the zero polynomial. Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A resource cap of the skein computation was exceeded (crossing count or
// node count). Never a wrong answer. Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem trouble, including corrupt cache lines. Maps to CLI exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pretzel
