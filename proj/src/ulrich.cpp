#include "ulrich_lab/ulrich.hpp"

#include "ulrich_lab/error.hpp"

namespace ulrich_lab {

PolarizedData::PolarizedData(int n, Integer Hn, Integer HK) : n_(n), Hn_(std::move(Hn)), HK_(std::move(HK)) {
  if (n_ < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 2");
  if (Hn_ <= 0) throw Error(ErrorCode::InvalidArgument, "H^n must be positive");
  if (((n_ - 1) * Hn_ + HK_) % 2 != 0) {
    throw Error(ErrorCode::ParityViolation, "(n-1)H^n + H^{n-1}K must be even");
  }
}

PolarizedData polarization(const DelPezzoSurface& s) { return {2, s.degree(), -s.degree()}; }

CurveGenus curve_section_genus(const PolarizedData& p) {
  const Integer twice = (p.n() - 1) * p.Hn() + p.HK();
  if (twice % 2 != 0) throw Error(ErrorCode::ParityViolation, "odd (n-1)H^n + H^{n-1}K");
  CurveGenus g{twice / 2 + 1};
  g.non_geometric = g.value < 0;
  return g;
}

UlrichProfile ulrich_profile(const Integer& r, const PolarizedData& p) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "rank must be >= 1");
  return {r * p.Hn(), Rational(p.Hn() + curve_section_genus(p).value - 1)};
}

bool butler_semistability_criterion(const PolarizedData& p) {
  return (3 - p.n()) * p.Hn() > p.HK() + 2;
}

bool koszul_criterion(const PolarizedData& p) { return (2 - p.n()) * p.Hn() >= p.HK() + 4; }

bool coprime_stability_criterion(const PolarizedData& p) {
  const Integer g = curve_section_genus(p).value;
  return butler_semistability_criterion(p) && boost::multiprecision::gcd(Integer(p.Hn() - 1), g) == 1;
}

Integer ulrich_c2(const Integer& r, const Integer& c1_sq, const DelPezzoSurface& s) {
  const Integer excess = c1_sq - r * s.degree();
  if (excess % 2 != 0) {
    throw Error(ErrorCode::NotUlrichCompatible,
                "c1^2 = " + c1_sq.str() + " has the wrong parity for rank " + r.str());
  }
  return r + excess / 2;
}

namespace {

bool ulrich_conditions(const NumericClassData& f, const DelPezzoSurface& s) {
  const int d = s.degree();
  if (f.c1_dot_H != f.rank * d) return false;
  if ((f.c1_sq - f.rank * d) % 2 != 0) return false;
  if (f.c2 != ulrich_c2(f.rank, f.c1_sq, s)) return false;
  return euler_char(twist_by_hyperplane(f, -1, d)) == 0 &&
         euler_char(twist_by_hyperplane(f, -2, d)) == 0;
}

}  // namespace

bool is_ulrich_candidate(const BundleNumerics& f, const DelPezzoSurface& s) {
  if (f.c1.num_exceptional() != s.num_exceptional()) return false;
  if (!ulrich_conditions(numeric_data(f, s), s)) return false;
  // Recheck the vanishing through the full lattice calculus.
  const DivisorClass h = s.anticanonical_class();
  return euler_char(tensor_line(f, -h), s) == 0 && euler_char(tensor_line(f, Integer(-2) * h), s) == 0;
}

bool is_ulrich_candidate(const NumericClassData& f, const DelPezzoSurface& s) {
  if (f.rank < 1) return false;
  return ulrich_conditions(f, s);
}

Integer prioritary_polarization_check(const DelPezzoSurface& s) {
  return intersect(s.anticanonical_class(), s.canonical_class() + s.fiber_class(), s);
}

}  // namespace ulrich_lab
