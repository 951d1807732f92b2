#include "babcubic/sexagesimal.hpp"

#include <algorithm>
#include <cctype>

#include "babcubic/error.hpp"

namespace babcubic {

namespace {

constexpr unsigned kBase = 60;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("invalid number '" + std::string(text) + "': " + why);
}

std::vector<unsigned> parse_digit_group(std::string_view group,
                                        std::string_view whole) {
  std::vector<unsigned> digits;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = group.find(',', start);
    std::string_view d = group.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    if (d.empty()) fail(whole, "empty digit");
    if (d.size() > 2) fail(whole, "digit '" + std::string(d) + "' is not below 60");
    unsigned v = 0;
    for (char c : d) {
      if (c < '0' || c > '9') fail(whole, "unexpected character '" + std::string(1, c) + "'");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    if (v >= kBase) fail(whole, "digit " + std::to_string(v) + " is not below 60");
    digits.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return digits;
}

Integer parse_decimal(std::string_view s, std::string_view whole) {
  if (s.empty()) fail(whole, "empty integer");
  Integer v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') fail(whole, "unexpected character '" + std::string(1, c) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

Integer strip_regular_factors(Integer n) {
  for (unsigned p : {2u, 3u, 5u}) {
    while (!n.is_zero() && n % p == 0) n /= p;
  }
  return n;
}

}  // namespace

ExactNumber SexForm::value() const {
  Integer whole = 0;
  for (unsigned d : integer_digits) whole = whole * kBase + d;
  Integer frac = 0;
  Integer scale = 1;
  for (unsigned d : fraction_digits) {
    frac = frac * kBase + d;
    scale *= kBase;
  }
  ExactNumber v = ExactNumber(whole) + ExactNumber(frac, scale);
  return sign < 0 ? -v : v;
}

ExactNumber parse_number(std::string_view text, LiteralPlacement placement) {
  std::string_view s = trim(text);
  if (s.empty()) fail(text, "empty literal");
  SexForm form;
  if (s.front() == '-') {
    form.sign = -1;
    s.remove_prefix(1);
  }
  std::size_t semi = s.find(';');
  if (semi == std::string_view::npos) {
    auto digits = parse_digit_group(s, text);
    if (placement == LiteralPlacement::Fraction) {
      form.fraction_digits = std::move(digits);
    } else {
      form.integer_digits = std::move(digits);
    }
  } else {
    if (s.find(';', semi + 1) != std::string_view::npos) {
      fail(text, "more than one ';'");
    }
    form.integer_digits = parse_digit_group(s.substr(0, semi), text);
    form.fraction_digits = parse_digit_group(s.substr(semi + 1), text);
  }
  return form.value();
}

bool looks_like_literal(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  return !text.empty() && std::isdigit(static_cast<unsigned char>(text.front()));
}

ExactNumber parse_literal(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return parse_number(s);

  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
    --slash;
  }
  ExactNumber whole = 0;
  std::size_t space = s.find(' ');
  if (space != std::string_view::npos) {
    whole = parse_decimal(s.substr(0, space), text);
    s = trim(s.substr(space + 1));
    slash = s.find('/');
    if (slash == std::string_view::npos) fail(text, "expected fraction after whole part");
  }
  Integer num = parse_decimal(trim(s.substr(0, slash)), text);
  Integer den = parse_decimal(trim(s.substr(slash + 1)), text);
  if (den.is_zero()) fail(text, "zero denominator");
  ExactNumber v = whole + ExactNumber(num, den);
  return negative ? -v : v;
}

SexForm to_sex_form(const ExactNumber& x) {
  if (strip_regular_factors(x.denominator()) != 1) {
    throw Error(ErrorCode::NotFiniteExpansion,
                x.to_fraction_string() + " has no finite sexagesimal expansion");
  }
  SexForm form;
  form.sign = x.sign() < 0 ? -1 : 1;
  ExactNumber a = x.abs();
  Integer whole = a.floor();
  ExactNumber frac = a - ExactNumber(whole);

  form.integer_digits.clear();
  if (whole.is_zero()) {
    form.integer_digits.push_back(0);
  } else {
    while (!whole.is_zero()) {
      form.integer_digits.push_back(static_cast<unsigned>(whole % kBase));
      whole /= kBase;
    }
    std::reverse(form.integer_digits.begin(), form.integer_digits.end());
  }
  // Terminates: the denominator only has factors 2, 3, 5.
  while (!frac.is_zero()) {
    frac *= ExactNumber(static_cast<int>(kBase));
    Integer d = frac.floor();
    form.fraction_digits.push_back(static_cast<unsigned>(d));
    frac -= ExactNumber(d);
  }
  if (x.is_zero()) form.sign = 1;
  return form;
}

std::string render_number(const ExactNumber& x, Placement placement) {
  if (placement == Placement::Integer && !x.is_integer()) {
    throw Error(ErrorCode::NotInteger, x.to_fraction_string() + " is not an integer");
  }
  SexForm form = to_sex_form(x);
  std::string out;
  if (form.sign < 0) out += '-';
  for (std::size_t i = 0; i < form.integer_digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(form.integer_digits[i]);
  }
  if (!form.fraction_digits.empty()) {
    out += ';';
    for (std::size_t i = 0; i < form.fraction_digits.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(form.fraction_digits[i]);
    }
  }
  return out;
}

std::string render_or_fraction(const ExactNumber& x) {
  if (strip_regular_factors(x.denominator()) != 1) return x.to_fraction_string();
  return render_number(x);
}

ExactNumber arithmetic(const ExactNumber& a, const ExactNumber& b,
                       ArithmeticOp op) {
  switch (op) {
    case ArithmeticOp::Add: return a + b;
    case ArithmeticOp::Sub: return a - b;
    case ArithmeticOp::Mul: return a * b;
    case ArithmeticOp::Div: return a / b;
  }
  return {};
}

ExactNumber reciprocal(const ExactNumber& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "reciprocal of zero");
  return x.inverse();
}

bool is_regular_integer(Integer n) {
  if (n.sign() < 0) n = -n;
  if (n.is_zero()) throw Error(ErrorCode::ZeroInput, "regularity of zero");
  return strip_regular_factors(std::move(n)) == 1;
}

bool is_regular(const ExactNumber& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "regularity of zero");
  return is_regular_integer(x.numerator()) && is_regular_integer(x.denominator());
}

}  // namespace babcubic
