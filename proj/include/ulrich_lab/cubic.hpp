#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/integer.hpp"
#include "ulrich_lab/picard.hpp"

namespace ulrich_lab {

/// Orbit type of a twisted cubic class on X_3 under permutations of E_1..E_6:
///   A (1;0^6), B (2;1^3,0^3), C (3;2,1^4,0), D (4;2^3,1^3), E (5;2^6).
enum class CubicType { A, B, C, D, E };

std::string_view to_string(CubicType type);

struct TwistedCubicClass {
  DivisorClass cls;
  CubicType type;

  friend bool operator==(const TwistedCubicClass&, const TwistedCubicClass&) = default;
  /// Orders by (type, coordinates).
  friend std::strong_ordering operator<=>(const TwistedCubicClass& x, const TwistedCubicClass& y);
};

/// The cubic surface X_3.
const DelPezzoSurface& cubic_surface();

/// Orbit representatives, plus T_B' = (2;0,0,0,1,1,1).
DivisorClass twisted_cubic_representative(CubicType type);
DivisorClass twisted_cubic_b_prime();

/// All 72 twisted cubic classes, sorted by (type, coordinates).
const std::vector<TwistedCubicClass>& twisted_cubics();

bool is_twisted_cubic(const DivisorClass& d);

struct StableSumDecomposition {
  std::vector<TwistedCubicClass> parts;
  DivisorClass target;
};

enum class DecompositionMode {
  Ordered,
  /// One ordering per multiset of parts: the lexicographically least valid one.
  Unordered,
};

constexpr int kMaxDecompositionParts = 6;

/// Checks sum T_i = target and (T_1 + ... + T_{j-1}).T_j >= 2j - 1 for j = 2..r.
bool satisfies_stable_sum_conditions(std::span<const TwistedCubicClass> parts, const DivisorClass& target);

/// Every ordered r-tuple of twisted cubics meeting both conditions, in
/// lexicographic order. Throws InvalidArgument unless 2 <= r <= 6.
std::vector<StableSumDecomposition> decompose_stable_sum(const DivisorClass& target, int r,
                                                         DecompositionMode mode = DecompositionMode::Ordered);

/// chi(F_{j-1}^* (x) M_{T_j}) = 2(j - 1) - sum_{i<j} T_i.T_j.
Integer chi_pair_closed_form(int j, std::span<const Integer> pairings);

/// The same Euler characteristic through dual, tensor and Riemann-Roch, with
/// M_T = syzygy numerics of O(T) at h0 = 3. `fprev` must have even rank.
Integer chi_pair_oracle(const BundleNumerics& fprev, const TwistedCubicClass& t);

/// Numerics of the direct sum M_{T_1} + ... + M_{T_m}.
BundleNumerics syzygy_sum(std::span<const TwistedCubicClass> parts);

struct CubicModuliPair {
  BundleNumerics partner;
  Integer dim;
};

/// For an Ulrich candidate E of rank r >= 2 on X_3: the kernel-bundle class
/// (2r, -c1, c2 + r) and the common dimension c1^2 - 2r^2 + 1. Throws NotUlrich.
CubicModuliPair cubic_moduli_pair(const BundleNumerics& f);

/// Twist of a rank-4 partner by a line bundle.
BundleNumerics corcubic_row(const BundleNumerics& base, const DivisorClass& twist);

}  // namespace ulrich_lab
