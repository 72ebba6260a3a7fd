#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltree {

/// Malformed textual input (word DSL, expressions, group definition files,
/// points). Carries a 1-based line number when it comes from a file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when the common initial segment of two words does not exist, i.e.
/// the words are not both members of one subgroup of CDR.
class ComUndefined : public std::domain_error {
 public:
  ComUndefined() : std::domain_error("common initial segment undefined") {}
};

}  // namespace ltree
