#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlink {

/// Base class for recoverable errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
class PolyParseError : public Error {
 public:
  PolyParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed diagram text. `line` is 1-based.
class DiagramParseError : public Error {
 public:
  DiagramParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structurally broken diagram (or an operation's precondition on the
/// diagram does not hold). Carries the individual violations.
class SemanticError : public Error {
 public:
  explicit SemanticError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& vs) {
    std::string out;
    for (const auto& v : vs) {
      if (!out.empty()) out += "; ";
      out += v;
    }
    return out.empty() ? std::string("semantic error") : out;
  }
  std::vector<std::string> violations_;
};

/// A rewrite site that does not match the diagram it is applied to.
class InvalidSiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistlink
