#pragma once

#include <span>
#include <vector>

#include "ulrich_lab/integer.hpp"
#include "ulrich_lab/picard.hpp"

namespace ulrich_lab {

/// Numerical class v(F) = (rank, c1, c2) of a vector bundle on a del Pezzo
/// surface.
struct BundleNumerics {
  Integer rank;
  DivisorClass c1;
  Integer c2;

  /// Throws InvalidArgument unless rank >= 1.
  BundleNumerics(Integer rank, DivisorClass c1, Integer c2);

  friend bool operator==(const BundleNumerics&, const BundleNumerics&) = default;
};

/// Reduced Chern data: only c1^2 and c1.H of the first Chern class are kept.
/// Closed under twists by multiples of H and under the syzygy transform.
struct NumericClassData {
  Integer rank;
  Integer c1_sq;
  Integer c1_dot_H;
  Integer c2;

  friend bool operator==(const NumericClassData&, const NumericClassData&) = default;
};

BundleNumerics line_bundle(DivisorClass c1);
BundleNumerics trivial_bundle(const DelPezzoSurface& s);

NumericClassData numeric_data(const BundleNumerics& f, const DelPezzoSurface& s);

BundleNumerics tensor_line(const BundleNumerics& f, const DivisorClass& l);
BundleNumerics tensor(const BundleNumerics& f, const BundleNumerics& g);
/// Throws EmptySum on an empty sequence.
BundleNumerics direct_sum(std::span<const BundleNumerics> fs);
BundleNumerics dual(const BundleNumerics& f);

/// Riemann-Roch with chi(O_X) = 1. Throws ParityViolation if c1^2 - c1.K is odd.
Integer euler_char(const BundleNumerics& f, const DelPezzoSurface& s);
/// mu_H(F) = c1.H / rank.
Rational slope(const BundleNumerics& f, const DelPezzoSurface& s);
/// 2 s c2 - (s - 1) c1^2.
Integer discriminant(const BundleNumerics& f);
/// Delta(F) - (s^2 - 1).
Integer expected_moduli_dim(const BundleNumerics& f);

// Mirrors on reduced data. The surface enters only through H^2 = d and K = -H.

/// F(mH).
NumericClassData twist_by_hyperplane(const NumericClassData& f, const Integer& m, int degree);
NumericClassData dual(const NumericClassData& f);
Integer euler_char(const NumericClassData& f);
Rational slope(const NumericClassData& f);
Integer discriminant(const NumericClassData& f);
Integer expected_moduli_dim(const NumericClassData& f);

}  // namespace ulrich_lab
