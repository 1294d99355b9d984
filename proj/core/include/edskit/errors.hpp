#pragma once

#include <stdexcept>
#include <string>

namespace edskit {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configured size limit was hit. Never silently approximated.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace edskit
