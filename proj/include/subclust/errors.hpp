#ifndef SUBCLUST_ERRORS_HPP
#define SUBCLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subclust {

/// File could not be parsed. `line` is 1-based, 0 when not attributable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? message + " (line " + std::to_string(line) + ")"
                                  : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Inconsistent configuration, e.g. a class attribute that names no column.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace subclust

#endif
