#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrh {

/// Invalid arguments to an operation (out-of-range vertex, bad parameter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed hypergraph / multipartite text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An exact computation was asked for beyond its configured cap.
class ResourceRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrh
