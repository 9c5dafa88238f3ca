#pragma once

#include <stdexcept>
#include <string>

namespace scycle {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line)
    {
    }
    std::size_t line;
};

// a documented precondition of an operation does not hold
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// an exhaustive search ran out of its budget
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace scycle
