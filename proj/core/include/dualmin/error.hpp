#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualmin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (matrix product, vector length, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A letter, state or observation name that the automaton does not know.
class UnknownSymbolError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the given semiring or output set.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A construction would materialise more states than the configured bound.
class StateBoundError : public Error {
public:
    StateBoundError(const std::string& what, std::size_t bound)
        : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

/// Malformed automaton description; the message carries the JSON path.
class ParseError : public Error {
public:
    ParseError(std::string path, const std::string& message)
        : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace dualmin
