#pragma once

#include <string>

#include "ulrich_lab/integer.hpp"

namespace ulrich_lab {

/// Exact element a + b sqrt(D) of Q(sqrt(D)) with rational a, b and a fixed
/// positive radicand D. Values with different radicands do not mix.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational a, Rational b, Integer radicand);

  static QuadraticNumber rational(Rational a, Integer radicand) { return {std::move(a), 0, std::move(radicand)}; }
  static QuadraticNumber sqrt_of(Integer radicand) { return {0, 1, std::move(radicand)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  const Integer& radicand() const { return radicand_; }

  bool is_rational() const { return b_ == 0; }
  QuadraticNumber conjugate() const { return {a_, -b_, radicand_}; }
  /// a^2 - b^2 D.
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(radicand_); }
  /// Throws InvalidArgument on a zero divisor.
  QuadraticNumber inverse() const;
  /// Integer powers; negative exponents go through inverse().
  QuadraticNumber pow(long exponent) const;

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

  /// Debug display only.
  double to_double() const;
  std::string to_string() const;

 private:
  void require_same_field(const QuadraticNumber& o) const;

  Rational a_;
  Rational b_;
  Integer radicand_;
};

}  // namespace ulrich_lab
