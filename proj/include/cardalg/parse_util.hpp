#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cardalg/natural.hpp"

namespace cardalg {

/// Syntax error carrying the byte offset into the input and the set of
/// tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Character cursor shared by the small recursive-descent parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  std::size_t offset() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  char peek();
  std::string_view rest() const { return text_.substr(pos_); }

  /// Consumes `token` (after whitespace) if present.
  bool accept(std::string_view token);
  void expect(std::string_view token);
  /// Consumes an identifier [A-Za-z_][A-Za-z0-9_]* if present.
  bool identifier(std::string& out);
  bool peek_digit();
  Natural natural();
  std::uint64_t small_natural(std::uint64_t max_value);
  void expect_end();

  [[noreturn]] void fail(std::vector<std::string> expected,
                         const std::string& message) const;
  [[noreturn]] void fail_at(std::size_t offset, std::vector<std::string> expected,
                            const std::string& message) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace cardalg
