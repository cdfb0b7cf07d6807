#pragma once

#include <stdexcept>
#include <string>

namespace sepgroid {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not line oriented.
class ParseError : public Error {
public:
    ParseError(const std::string &msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Operation called outside its domain (precondition violation).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace sepgroid
