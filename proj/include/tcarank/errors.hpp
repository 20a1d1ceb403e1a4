#ifndef TCARANK_ERRORS_HPP
#define TCARANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tcarank {

// Input file could not be parsed; `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// GHC requested for data that is not globally homogeneous (Scenario 2).
class NotHomogeneousError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tcarank

#endif
