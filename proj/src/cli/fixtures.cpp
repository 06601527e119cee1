#include "ulrich_lab/cli/fixtures.hpp"

#include <functional>

#include "ulrich_lab/cubic.hpp"
#include "ulrich_lab/error.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace ulrich_lab::cli {

const std::vector<Main2Row>& main2_fixture() {
  static const std::vector<Main2Row> rows{
      {4, 12, 4, 1}, {4, 16, 6, 5}, {5, 16, 5, 1}, {5, 20, 7, 5}, {6, 20, 6, 1},
      {6, 24, 8, 5}, {7, 24, 7, 1}, {7, 26, 8, 3}, {7, 28, 9, 5},
  };
  return rows;
}

const std::vector<CorcubicRow>& corcubic_fixture() {
  static const std::vector<CorcubicRow> rows{
      {parse_divisor("(4;2,1,1,1,1,0)"), 3, 5, 1},
      {parse_divisor("(4;1,1,1,1,1,1)"), 4, 6, 3},
      {parse_divisor("(6;2,2,2,2,2,2)"), 5, 7, 5},
  };
  return rows;
}

std::optional<DivisorClass> find_class(const DelPezzoSurface& s, const Integer& c1_dot_h, const Integer& c1_sq) {
  const int t = s.num_exceptional();
  const DivisorClass h = s.anticanonical_class();
  constexpr int kLow = -2, kHigh = 8;
  std::vector<Integer> b(t);
  for (int a = 0; a <= 40; ++a) {
    std::optional<DivisorClass> found;
    // Non-increasing b, so each permutation orbit is visited once.
    std::function<bool(int, int)> fill = [&](int i, int cap) {
      if (i == t) {
        DivisorClass c(a, b);
        if (intersect(c, h) == c1_dot_h && intersect(c, c) == c1_sq) {
          found = std::move(c);
          return true;
        }
        return false;
      }
      for (int v = cap; v >= kLow; --v) {
        b[i] = v;
        if (fill(i + 1, v)) return true;
      }
      return false;
    };
    if (fill(0, kHigh)) return found;
  }
  return std::nullopt;
}

std::vector<BundleNumerics> shipped_seeds() {
  std::vector<BundleNumerics> out;
  for (const auto& row : main2_fixture()) {
    const DelPezzoSurface s(row.d);
    const auto c1 = find_class(s, 2 * row.d, row.c1_sq);
    if (!c1) throw Error(ErrorCode::InternalMismatch, "no class for a table row");
    out.emplace_back(2, *c1, row.c2);
  }
  for (const auto& row : corcubic_fixture()) out.emplace_back(2, row.ulrich_c1, row.ulrich_c2);
  for (int d = 3; d <= 8; ++d) {
    const DelPezzoSurface s(d);
    if (auto c1 = find_class(s, d, d - 2)) out.push_back(line_bundle(*c1));
  }
  return out;
}

int degree_of(const DivisorClass& c) {
  const int d = 9 - c.num_exceptional();
  if (d < 3 || d > 8) throw Error(ErrorCode::DegreeOutOfRange, "class has no del Pezzo surface of degree 3..8");
  return d;
}

}  // namespace ulrich_lab::cli
