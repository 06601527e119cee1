#include "ulrich_lab/chern.hpp"

#include "ulrich_lab/error.hpp"

namespace ulrich_lab {

namespace {

Integer half_exact(const Integer& v, const char* what) {
  if (v % 2 != 0) {
    throw Error(ErrorCode::ParityViolation, std::string(what) + " is odd: " + v.str());
  }
  return v / 2;
}

Integer riemann_roch(const Integer& rank, const Integer& c1_sq, const Integer& c1_dot_K,
                     const Integer& c2) {
  return rank + half_exact(c1_sq - c1_dot_K, "c1^2 - c1.K") - c2;
}

}  // namespace

BundleNumerics::BundleNumerics(Integer r, DivisorClass c, Integer second)
    : rank(std::move(r)), c1(std::move(c)), c2(std::move(second)) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "bundle rank must be >= 1");
}

BundleNumerics line_bundle(DivisorClass c1) { return BundleNumerics(1, std::move(c1), 0); }

BundleNumerics trivial_bundle(const DelPezzoSurface& s) { return line_bundle(s.zero()); }

NumericClassData numeric_data(const BundleNumerics& f, const DelPezzoSurface& s) {
  return {f.rank, intersect(f.c1, f.c1, s), intersect(f.c1, s.anticanonical_class(), s), f.c2};
}

BundleNumerics tensor_line(const BundleNumerics& f, const DivisorClass& l) {
  return BundleNumerics(f.rank, f.c1 + f.rank * l,
                        choose2(f.rank) * intersect(l, l) + (f.rank - 1) * intersect(f.c1, l) + f.c2);
}

// A rank-one factor is a line bundle; its c2 does not enter.
BundleNumerics tensor(const BundleNumerics& f, const BundleNumerics& g) {
  const Integer& s = f.rank;
  const Integer& t = g.rank;
  DivisorClass c1 = t * f.c1 + s * g.c1;
  if (s == 1 && t == 1) return BundleNumerics(1, std::move(c1), 0);
  if (t == 1) return tensor_line(f, g.c1);
  if (s == 1) return tensor_line(g, f.c1);
  Integer c2 = choose2(s) * intersect(g.c1, g.c1) + s * g.c2 + (s * t - 1) * intersect(f.c1, g.c1) +
               t * f.c2 + choose2(t) * intersect(f.c1, f.c1);
  return BundleNumerics(s * t, std::move(c1), std::move(c2));
}

BundleNumerics direct_sum(std::span<const BundleNumerics> fs) {
  if (fs.empty()) throw Error(ErrorCode::EmptySum, "direct sum of no bundles");
  Integer rank = 0;
  DivisorClass c1 = DivisorClass::zero(fs.front().c1.num_exceptional());
  Integer c2 = 0;
  for (const auto& f : fs) {
    c2 += f.c2 + intersect(c1, f.c1);
    c1 += f.c1;
    rank += f.rank;
  }
  return BundleNumerics(std::move(rank), std::move(c1), std::move(c2));
}

BundleNumerics dual(const BundleNumerics& f) { return BundleNumerics(f.rank, -f.c1, f.c2); }

Integer euler_char(const BundleNumerics& f, const DelPezzoSurface& s) {
  s.require_on_surface(f.c1);
  return riemann_roch(f.rank * s.euler_char_structure_sheaf(), intersect(f.c1, f.c1),
                      intersect(f.c1, s.canonical_class()), f.c2);
}

Rational slope(const BundleNumerics& f, const DelPezzoSurface& s) {
  return Rational(intersect(f.c1, s.anticanonical_class(), s), f.rank);
}

Integer discriminant(const BundleNumerics& f) {
  return 2 * f.rank * f.c2 - (f.rank - 1) * intersect(f.c1, f.c1);
}

Integer expected_moduli_dim(const BundleNumerics& f) {
  return discriminant(f) - (f.rank * f.rank - 1);
}

NumericClassData twist_by_hyperplane(const NumericClassData& f, const Integer& m, int degree) {
  const Integer l_sq = m * m * degree;
  const Integer c1_dot_l = m * f.c1_dot_H;
  return {f.rank, f.c1_sq + 2 * f.rank * c1_dot_l + f.rank * f.rank * l_sq,
          f.c1_dot_H + f.rank * m * degree,
          choose2(f.rank) * l_sq + (f.rank - 1) * c1_dot_l + f.c2};
}

NumericClassData dual(const NumericClassData& f) { return {f.rank, f.c1_sq, -f.c1_dot_H, f.c2}; }

Integer euler_char(const NumericClassData& f) {
  return riemann_roch(f.rank, f.c1_sq, -f.c1_dot_H, f.c2);
}

Rational slope(const NumericClassData& f) { return Rational(f.c1_dot_H, f.rank); }

Integer discriminant(const NumericClassData& f) { return 2 * f.rank * f.c2 - (f.rank - 1) * f.c1_sq; }

Integer expected_moduli_dim(const NumericClassData& f) {
  return discriminant(f) - (f.rank * f.rank - 1);
}

}  // namespace ulrich_lab
