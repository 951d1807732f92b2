#include "babcubic/exact_number.hpp"

#include <ostream>

#include "babcubic/error.hpp"

namespace babcubic {

ExactNumber::ExactNumber(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "zero denominator");
  }
  normalize();
}

void ExactNumber::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExactNumber ExactNumber::abs() const {
  ExactNumber r = *this;
  if (r.num_.sign() < 0) r.num_ = -r.num_;
  return r;
}

ExactNumber ExactNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return ExactNumber(den_, num_);
}

ExactNumber ExactNumber::pow(unsigned exponent) const {
  ExactNumber r;
  r.num_ = boost::multiprecision::pow(num_, exponent);
  r.den_ = boost::multiprecision::pow(den_, exponent);
  return r;
}

Integer ExactNumber::floor() const {
  Integer q = num_ / den_;  // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

ExactNumber ExactNumber::operator-() const {
  ExactNumber r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactNumber::to_fraction_string() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) {
  return os << x.to_fraction_string();
}

}  // namespace babcubic
