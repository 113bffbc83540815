#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revnoise {

/// A requested computation exceeds a configured resource cap (state-vector
/// width, qubit count, ...). Carries the cap so callers can report it.
class ResourceLimitError : public std::runtime_error {
  public:
    ResourceLimitError(const std::string& what, std::size_t requested, std::size_t cap)
        : std::runtime_error(what + " (requested " + std::to_string(requested) +
                             ", cap " + std::to_string(cap) + ")"),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const { return requested_; }
    std::size_t cap() const { return cap_; }

  private:
    std::size_t requested_;
    std::size_t cap_;
};

/// A value that should be a valid state (e.g. a PSD trace-1 matrix) is not.
class InvalidStateError : public std::runtime_error {
  public:
    explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format parse failure; carries the 1-based offending line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

} // namespace revnoise
