#pragma once

#include <stdexcept>
#include <string>

namespace tfold {

// Malformed input text: documents, basket strings, rational literals, CLI
// values. Carries an optional 1-based document position. CLI exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(with_position(msg, line, col)), line_(line), col_(col) {}

    int line() const { return line_; }  // 0 when the error has no position
    int col() const { return col_; }

private:
    static std::string with_position(const std::string& msg, int line, int col) {
        return "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg;
    }

    int line_ = 0;
    int col_ = 0;
};

// Structurally valid input that is mathematically unusable: no solvable K^3,
// inconsistent constraints, out-of-range invariants, violated scenario
// premises, non-integral plurigenera. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tfold
