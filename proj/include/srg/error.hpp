#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srg {

/// Caller supplied something outside an operation's domain (bad vertex,
/// mismatched order, inadmissible parameter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request lies outside what the toolkit is built to attempt (search guard,
/// unsupported class size).
class OutOfScopeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace srg
