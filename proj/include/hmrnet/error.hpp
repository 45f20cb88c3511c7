#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmrnet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph input: out-of-range endpoints, self-loops.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A caller violated a documented precondition (e.g. a delta-invalid labeling).
class ContractError : public Error {
public:
    using Error::Error;
};

// Numerically or dimensionally unusable input.
class InputError : public Error {
public:
    using Error::Error;
};

class EnumerationOverflow : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hmrnet
