#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace statseq {

// Invalid argument to a library operation: out-of-range parameter,
// mismatched lengths, non-finite input, and the like.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  explicit ParseError(const std::string& message)
      : std::runtime_error(message), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace statseq
