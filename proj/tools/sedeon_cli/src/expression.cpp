#include "sedeon_cli/expression.hpp"

#include <cctype>

#include "sedeon/algebra.hpp"

namespace sedeon::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sedeon parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Sedeon result = factor();
    skip_space();
    while (!at_end()) {
      if (peek() != '*') fail(std::string("expected '*', found '") + peek() + "'");
      ++pos_;
      skip_space();
      if (at_end()) fail("expected a factor after '*'");
      result = mul(result, factor());
      skip_space();
    }
    return result;
  }

 private:
  [[nodiscard]] bool at_end() const noexcept { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const noexcept { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume_sign() {
    if (!at_end() && peek() == '-') {
      ++pos_;
      return true;
    }
    static constexpr std::string_view kMinus = "\xE2\x88\x92";  // U+2212
    if (text_.substr(pos_, kMinus.size()) == kMinus) {
      pos_ += kMinus.size();
      return true;
    }
    return false;
  }

  int unit_digit() {
    if (at_end() || peek() < '0' || peek() > '3') fail("expected a unit index 0..3");
    return peek() - '0';
  }

  Sedeon factor() {
    const bool negative = consume_sign();
    if (at_end()) fail("expected a factor");
    Sedeon f;
    const char c = peek();
    if (c == '1') {
      ++pos_;
      f = Sedeon::one();
    } else if (c == 'i') {
      ++pos_;
      f = kI * Sedeon::one();
    } else if (c == 'e') {
      ++pos_;
      const int n = unit_digit();
      ++pos_;
      int k = 0;
      if (!at_end() && peek() == 'a') {
        ++pos_;
        k = unit_digit();
        ++pos_;
      }
      f = Sedeon::basis(n, k);
    } else if (c == 'a') {
      ++pos_;
      const int k = unit_digit();
      ++pos_;
      f = Sedeon::basis(0, k);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
      fail(std::string("unexpected character '") + peek() + "' after factor");
    }
    return negative ? -f : f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Sedeon parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace sedeon::cli
