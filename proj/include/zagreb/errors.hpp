#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zagreb {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(const std::string &token)
        : Error("unknown vertex: " + token) {}
};

class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string &what) : Error(what) {}
};

// Formula evaluated outside k >= 3, n - k >= 1.
class DomainError : public Error {
public:
    explicit DomainError(const std::string &what) : Error(what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string &what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string &what) : Error(what), line_(0) {}

    // 1-based input line, 0 when the error is not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace zagreb
