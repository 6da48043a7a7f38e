#include "cardalg/parse_util.hpp"

#include <cctype>
#include <sstream>

namespace cardalg {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& message) {
  std::ostringstream os;
  os << "parse error at offset " << offset << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error(describe(offset, expected, message)),
      offset_(offset),
      expected_(std::move(expected)) {}

void Cursor::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Cursor::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Cursor::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Cursor::accept(std::string_view token) {
  skip_space();
  if (text_.substr(pos_, token.size()) != token) return false;
  pos_ += token.size();
  return true;
}

void Cursor::expect(std::string_view token) {
  if (!accept(token)) fail({"'" + std::string(token) + "'"}, "unexpected input");
}

bool Cursor::identifier(std::string& out) {
  skip_space();
  if (pos_ >= text_.size()) return false;
  const char c = text_[pos_];
  if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) return false;
  std::size_t end = pos_ + 1;
  while (end < text_.size() &&
         (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
    ++end;
  out.assign(text_.substr(pos_, end - pos_));
  pos_ = end;
  return true;
}

bool Cursor::peek_digit() {
  skip_space();
  return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
}

Natural Cursor::natural() {
  if (!peek_digit()) fail({"number"}, "unexpected input");
  std::size_t end = pos_;
  while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
  Natural n = parse_natural(text_.substr(pos_, end - pos_));
  pos_ = end;
  return n;
}

std::uint64_t Cursor::small_natural(std::uint64_t max_value) {
  const std::size_t start = (skip_space(), pos_);
  Natural n = natural();
  if (n > Natural(max_value))
    fail_at(start, {}, "number too large (max " + std::to_string(max_value) + ")");
  return n.convert_to<std::uint64_t>();
}

void Cursor::expect_end() {
  if (!at_end()) fail({"end of input"}, "trailing input");
}

void Cursor::fail(std::vector<std::string> expected, const std::string& message) const {
  throw ParseError(pos_, std::move(expected), message);
}

void Cursor::fail_at(std::size_t offset, std::vector<std::string> expected,
                     const std::string& message) const {
  throw ParseError(offset, std::move(expected), message);
}

}  // namespace cardalg
