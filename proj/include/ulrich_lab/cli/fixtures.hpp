#pragma once

#include <optional>
#include <vector>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/picard.hpp"

namespace ulrich_lab::cli {

/// One row of the rank-2 moduli table on X_d: c1.H = 2d.
struct Main2Row {
  int d;
  long c1_sq;
  long c2;
  long dim;
};

const std::vector<Main2Row>& main2_fixture();

/// One row of the rank-4 table on the cubic surface at zero twist.
struct CorcubicRow {
  /// c1 of the rank-2 Ulrich bundle E, a sum of two twisted cubics.
  DivisorClass ulrich_c1;
  long ulrich_c2;
  /// Partner data (4, -ulrich_c1, partner_c2).
  long partner_c2;
  long dim;
};

const std::vector<CorcubicRow>& corcubic_fixture();

/// First class (a; b_1 >= ... >= b_t) in a small search box with the given
/// degree and self-intersection, or nothing. Deterministic.
std::optional<DivisorClass> find_class(const DelPezzoSurface& s, const Integer& c1_dot_h, const Integer& c1_sq);

/// Rank-2 Ulrich seeds for every table row plus Ulrich line bundles on each
/// degree where one exists (none on X_8).
std::vector<BundleNumerics> shipped_seeds();

/// Degree of the surface a class lives on, from its number of exceptional
/// coordinates. Throws DegreeOutOfRange.
int degree_of(const DivisorClass& c);

}  // namespace ulrich_lab::cli
