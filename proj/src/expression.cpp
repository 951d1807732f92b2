#include "babcubic/expression.hpp"

#include <cctype>
#include <string>

#include "babcubic/error.hpp"
#include "babcubic/sexagesimal.hpp"
#include "babcubic/tables.hpp"

namespace babcubic {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExactNumber parse() {
    ExactNumber v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression: " + why, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExactNumber expr() {
    ExactNumber v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ExactNumber term() {
    ExactNumber v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  ExactNumber unary() {
    if (accept('-')) return -unary();
    skip_space();
    std::size_t start = pos_;
    // Function names are letters with optional trailing digits ("basi2").
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) return primary();
    if (word == "igi") return reciprocal(unary());
    if (word == "square") {
      ExactNumber v = unary();
      return v * v;
    }
    if (word == "cuberoot") return cube_root_exact(unary());
    if (word == "basi2") {
      ExactNumber v = unary();
      if (!v.is_integer()) throw Error(ErrorCode::NotInteger, "basi2 needs an integer");
      return ExactNumber(Integer{inverse_lookup(TableKind::CubePlusSquare, v.numerator())});
    }
    pos_ = start;
    fail("unknown function '" + std::string(word) + "'");
  }

  ExactNumber primary() {
    if (accept('(')) {
      ExactNumber v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',' ||
            text_[pos_] == ';')) {
      ++pos_;
    }
    if (start == pos_) fail(pos_ < text_.size() ? "expected a number" : "unexpected end");
    try {
      return parse_number(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactNumber evaluate_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace babcubic
