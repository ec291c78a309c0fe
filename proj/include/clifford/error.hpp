#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clifford {

/// Malformed text. `position` is a 0-based character offset into the input
/// (or the offending line's text for line-oriented formats); `line` is
/// 1-based and 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0,
             std::vector<std::string> expected = {})
      : std::runtime_error(format(message, position, line, expected)),
        position_(position),
        line_(line),
        expected_(std::move(expected)) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t position, std::size_t line,
                            const std::vector<std::string>& expected) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(position + 1) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t k = 0; k < expected.size(); ++k) {
        if (k > 0) out += k + 1 == expected.size() ? " or " : ", ";
        out += expected[k];
      }
      out += ")";
    }
    return out;
  }

  std::size_t position_;
  std::size_t line_;
  std::vector<std::string> expected_;
};

/// Failure evaluating an expression or REPL command.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clifford
