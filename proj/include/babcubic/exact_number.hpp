#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace babcubic {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Exact rational number kept in lowest terms with a positive denominator.
// Zero is 0/1. Every operation is exact; nothing in the library rounds.
class ExactNumber {
 public:
  ExactNumber() : num_(0), den_(1) {}
  ExactNumber(Integer numerator)  // NOLINT(google-explicit-constructor)
      : num_(std::move(numerator)), den_(1) {}
  ExactNumber(std::int64_t numerator)  // NOLINT(google-explicit-constructor)
      : num_(numerator), den_(1) {}
  ExactNumber(int numerator)  // NOLINT(google-explicit-constructor)
      : num_(numerator), den_(1) {}
  ExactNumber(Integer numerator, Integer denominator);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  ExactNumber abs() const;
  // Throws DivisionByZero on zero.
  ExactNumber inverse() const;
  ExactNumber pow(unsigned exponent) const;
  // Largest integer not greater than the value.
  Integer floor() const;

  ExactNumber& operator+=(const ExactNumber& rhs);
  ExactNumber& operator-=(const ExactNumber& rhs);
  ExactNumber& operator*=(const ExactNumber& rhs);
  ExactNumber& operator/=(const ExactNumber& rhs);

  friend ExactNumber operator+(ExactNumber a, const ExactNumber& b) { return a += b; }
  friend ExactNumber operator-(ExactNumber a, const ExactNumber& b) { return a -= b; }
  friend ExactNumber operator*(ExactNumber a, const ExactNumber& b) { return a *= b; }
  friend ExactNumber operator/(ExactNumber a, const ExactNumber& b) { return a /= b; }
  ExactNumber operator-() const;

  friend bool operator==(const ExactNumber& a, const ExactNumber& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactNumber& a,
                                          const ExactNumber& b);

  // "p/q", or "p" for integers.
  std::string to_fraction_string() const;

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

}  // namespace babcubic
