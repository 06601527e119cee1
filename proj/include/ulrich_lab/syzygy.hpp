#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/integer.hpp"
#include "ulrich_lab/picard.hpp"
#include "ulrich_lab/quadratic.hpp"

namespace ulrich_lab {

/// Numerics of the kernel bundle M_F of the evaluation map H^0(F) (x) O -> F:
/// (h0 - rank, -c1, c1^2 - c2). Throws NoKernel unless h0 > rank.
BundleNumerics syzygy_numerics(const BundleNumerics& f, const Integer& h0);
NumericClassData syzygy_numerics(const NumericClassData& f, const Integer& h0);

/// N_{-1} = r, N_0 = r(d - 1), N_k = (d - 2) N_{k-1} - N_{k-2}.
/// Throws DegreeOutOfRange outside 3 <= d <= 8.
Integer rank_by_recurrence(int degree, const Integer& r, int k);

/// Closed form of the same sequence: (2k + 3) r for d = 4, otherwise
///   r ((a2^-(k+2) + a2^-(k+1)) - (a1^-(k+2) + a1^-(k+1))) / sqrt(d(d-4))
/// with a1,2 = ((d - 2) +- sqrt(d(d-4))) / 2, evaluated in Q(sqrt(d(d-4))).
/// Throws OutOfTheoremScope for d = 3 and NonIntegerResult if the irrational
/// parts fail to cancel.
Integer rank_closed_form(int degree, const Integer& r, int k);

/// The exact quadratic-field value behind rank_closed_form (d >= 5).
QuadraticNumber rank_closed_form_exact(int degree, const Integer& r, int k);

using SyzygySeed = std::variant<BundleNumerics, NumericClassData>;

struct SyzygyStep {
  int k = -1;
  /// Numerics of S_k(E); the seed itself at k = -1.
  NumericClassData data;
  /// Full class data, present when the seed carried an actual divisor class.
  std::optional<BundleNumerics> bundle;
};

/// Iterated syzygy bundles S_k(E) = M_{S_{k-1}(E)} (x) H, S_{-1}(E) = E.
class SyzygyTrace {
 public:
  SyzygyTrace(DelPezzoSurface surface, SyzygySeed seed, std::vector<SyzygyStep> entries);

  const DelPezzoSurface& surface() const { return surface_; }
  const SyzygySeed& seed() const { return seed_; }
  /// entries()[i] holds k = i - 1.
  const std::vector<SyzygyStep>& entries() const { return entries_; }
  const SyzygyStep& at(int k) const;
  int k_max() const { return static_cast<int>(entries_.size()) - 2; }

 private:
  DelPezzoSurface surface_;
  SyzygySeed seed_;
  std::vector<SyzygyStep> entries_;
};

/// Builds S_0 .. S_{k_max}. Each h0(S_{k-1}) is taken to be chi(S_{k-1}),
/// which holds because S_{k-1} is 1-regular; the resulting rank is checked
/// against rank_by_recurrence (InternalMismatch on disagreement).
/// Throws NotUlrich for a seed failing is_ulrich_candidate and
/// OutOfTheoremScope for d = 3 with k_max >= 1.
SyzygyTrace iterate_syzygy(const BundleNumerics& seed, const DelPezzoSurface& s, int k_max);
SyzygyTrace iterate_syzygy(const NumericClassData& seed, const DelPezzoSurface& s, int k_max);

/// (c1, c2) of S_k(E)(-H) from the closed recursions in k, without building
/// the intermediate bundles; k = -1 returns the seed's (c1, c2).
std::pair<DivisorClass, Integer> cink_chern(const BundleNumerics& seed, const DelPezzoSurface& s, int k);
/// Same on reduced data; the rank field is N_k.
NumericClassData cink_chern(const NumericClassData& seed, const DelPezzoSurface& s, int k);

/// v_{d,k} for a rank-2 Ulrich seed with the given c1^2, c2 on X_d, 4 <= d <= 7.
/// Ranks come from the closed form; k = -1 is the seed.
NumericClassData intro_chern(int degree, const Integer& c1_sq, const Integer& c2, int k);

/// Delta(S_k) - (N_k^2 - 1) for every entry of the trace.
std::vector<Integer> discriminant_drift(const SyzygyTrace& trace);

}  // namespace ulrich_lab
