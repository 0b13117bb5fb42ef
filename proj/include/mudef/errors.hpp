#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mudef {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed DIMACS input or a rejected clause.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A violated precondition that is the caller's fault (bad variable, bad spec, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Refusal to run an exponential procedure beyond a configured size cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::string cap, std::size_t limit, std::size_t actual)
        : Error("cap '" + cap + "' exceeded: limit " + std::to_string(limit) + ", got " +
                std::to_string(actual)),
          cap_(std::move(cap)),
          limit_(limit),
          actual_(actual) {}

    const std::string& cap() const noexcept { return cap_; }
    std::size_t limit() const noexcept { return limit_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::string cap_;
    std::size_t limit_;
    std::size_t actual_;
};

}  // namespace mudef
