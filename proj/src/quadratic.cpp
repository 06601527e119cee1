#include "ulrich_lab/quadratic.hpp"

#include <cmath>

#include "ulrich_lab/error.hpp"

namespace ulrich_lab {

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand)) {
  if (radicand_ <= 0) throw Error(ErrorCode::InvalidArgument, "radicand must be positive");
}

void QuadraticNumber::require_same_field(const QuadraticNumber& o) const {
  if (radicand_ != o.radicand_) {
    throw Error(ErrorCode::InvalidArgument,
                "mixed radicands " + radicand_.str() + " and " + o.radicand_.str());
  }
}

QuadraticNumber QuadraticNumber::inverse() const {
  const Rational n = norm();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "inverse of a zero divisor " + to_string());
  return {a_ / n, -b_ / n, radicand_};
}

QuadraticNumber QuadraticNumber::pow(long exponent) const {
  QuadraticNumber base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  QuadraticNumber result = rational(1, radicand_);
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  require_same_field(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(radicand_);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

double QuadraticNumber::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
}

std::string QuadraticNumber::to_string() const {
  return ulrich_lab::to_string(a_) + " + " + ulrich_lab::to_string(b_) + "*sqrt(" + radicand_.str() + ")";
}

}  // namespace ulrich_lab
