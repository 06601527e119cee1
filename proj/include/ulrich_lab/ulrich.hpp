#pragma once

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/integer.hpp"
#include "ulrich_lab/picard.hpp"

namespace ulrich_lab {

/// Numerical polarization data of an n-dimensional (X, H): H^n and H^{n-1}.K.
class PolarizedData {
 public:
  /// Throws InvalidArgument unless n >= 2 and Hn > 0, and ParityViolation
  /// unless (n - 1) Hn + HK is even.
  PolarizedData(int n, Integer Hn, Integer HK);

  int n() const { return n_; }
  const Integer& Hn() const { return Hn_; }
  const Integer& HK() const { return HK_; }

  friend bool operator==(const PolarizedData&, const PolarizedData&) = default;

 private:
  int n_;
  Integer Hn_;
  Integer HK_;
};

/// (2, d, -d) for the anticanonical polarization.
PolarizedData polarization(const DelPezzoSurface& s);

struct CurveGenus {
  Integer value;
  /// Set when the genus is negative, which no geometric input produces.
  bool non_geometric = false;
};

/// Genus of a curve section X_1: ((n - 1) H^n + H^{n-1}.K) / 2 + 1.
CurveGenus curve_section_genus(const PolarizedData& p);

struct UlrichProfile {
  Integer h0;
  Rational slope;
};

/// h0 = r H^n and slope d + g - 1 of a rank-r Ulrich bundle.
UlrichProfile ulrich_profile(const Integer& r, const PolarizedData& p);

/// (3 - n) H^n > H^{n-1}.K + 2: kernel bundles of Ulrich bundles are semistable.
bool butler_semistability_criterion(const PolarizedData& p);
/// (2 - n) H^n >= H^{n-1}.K + 4: Ulrich bundles are Koszul and all iterated
/// syzygy bundles are semistable.
bool koszul_criterion(const PolarizedData& p);
/// Butler's criterion plus gcd(H^n - 1, g) = 1.
bool coprime_stability_criterion(const PolarizedData& p);

/// c2 of a rank-r Ulrich bundle with given c1^2 on X_d, from chi(E(-H)) = 0
/// and c1.H = r d: c2 = r + (c1^2 - r d) / 2. Throws NotUlrichCompatible when
/// c1^2 and r d have different parity.
Integer ulrich_c2(const Integer& r, const Integer& c1_sq, const DelPezzoSurface& s);

/// Necessary numerical conditions for an Ulrich bundle: c1.H = r d,
/// c2 = ulrich_c2(r, c1^2), chi(F(-H)) = chi(F(-2H)) = 0.
bool is_ulrich_candidate(const BundleNumerics& f, const DelPezzoSurface& s);
bool is_ulrich_candidate(const NumericClassData& f, const DelPezzoSurface& s);

/// H.(K + F), computed on the lattice. Negative means Walter's prioritary
/// argument applies to the fiber class F.
Integer prioritary_polarization_check(const DelPezzoSurface& s);

}  // namespace ulrich_lab
