#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace demon {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &source, std::size_t line, const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside the operation's domain (unknown node, bad epsilon, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A metric whose value is not defined for the given input (e.g. a zero denominator).
class UndefinedResult : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace demon
