#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich_lab/integer.hpp"

namespace ulrich_lab {

/// A divisor class D = aL - b_1 E_1 - ... - b_t E_t on a blow-up of the plane,
/// written (a; b_1, ..., b_t). The pairing in these coordinates is
/// a a' - sum b_i b_i'.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(Integer a, std::vector<Integer> b) : a_(std::move(a)), b_(std::move(b)) {}

  /// The zero class on a lattice with t exceptional generators.
  static DivisorClass zero(int t);

  const Integer& a() const { return a_; }
  const std::vector<Integer>& b() const { return b_; }
  int num_exceptional() const { return static_cast<int>(b_.size()); }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Integer& k);

  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
  friend DivisorClass operator*(const Integer& k, DivisorClass x) { return x *= k; }
  friend DivisorClass operator-(DivisorClass x) { return x *= Integer(-1); }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  /// Lexicographic on (a, b_1, ..., b_t).
  friend std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y);

 private:
  Integer a_;
  std::vector<Integer> b_;
};

/// Anticanonically embedded del Pezzo surface X_d, the blow-up of the plane in
/// t = 9 - d general points, 3 <= d <= 8.
class DelPezzoSurface {
 public:
  static constexpr int kMinDegree = 3;
  static constexpr int kMaxDegree = 8;

  /// Throws DegreeOutOfRange unless 3 <= d <= 8.
  explicit DelPezzoSurface(int degree);

  int degree() const { return degree_; }
  int num_exceptional() const { return 9 - degree_; }
  int euler_char_structure_sheaf() const { return 1; }

  DivisorClass zero() const { return DivisorClass::zero(num_exceptional()); }
  DivisorClass line_class() const;              // L
  DivisorClass exceptional_class(int i) const;  // E_i, 1-based
  DivisorClass canonical_class() const;         // K = -3L + sum E_i
  DivisorClass anticanonical_class() const;     // H = -K
  DivisorClass fiber_class() const;             // F = L - E_1

  /// Throws LatticeMismatch when x does not live on this surface.
  void require_on_surface(const DivisorClass& x) const;

  friend bool operator==(const DelPezzoSurface&, const DelPezzoSurface&) = default;

 private:
  int degree_;
};

inline DelPezzoSurface make_surface(int degree) { return DelPezzoSurface(degree); }

/// Throws LatticeMismatch on differing lattice ranks.
Integer intersect(const DivisorClass& x, const DivisorClass& y);
Integer intersect(const DivisorClass& x, const DivisorClass& y, const DelPezzoSurface& s);

/// Applies a permutation of the exceptional curves: the coefficient of E_i
/// moves to E_{p[i]}. `p` is 0-based and must be a bijection on {0..t-1}.
DivisorClass permute_exceptionals(const DivisorClass& x, std::span<const int> p);

/// Grammar: "(" a ";" b1 "," ... "," bt ")" with optional whitespace.
DivisorClass parse_divisor(std::string_view text);
/// As above, additionally requiring the arity of `s`.
DivisorClass parse_divisor(std::string_view text, const DelPezzoSurface& s);
std::string format_divisor(const DivisorClass& x);

}  // namespace ulrich_lab
