#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ulrich_lab/error.hpp"
#include "ulrich_lab/picard.hpp"

using namespace ulrich_lab;

namespace {

DivisorClass cls(std::string_view text) { return parse_divisor(text); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ulrich_lab::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("surfaces carry the blow-up data") {
  const DelPezzoSurface x3 = make_surface(3);
  CHECK(x3.num_exceptional() == 6);
  CHECK(x3.euler_char_structure_sheaf() == 1);
  CHECK(x3.canonical_class() == cls("(-3;-1,-1,-1,-1,-1,-1)"));

  const DelPezzoSurface x8 = make_surface(8);
  CHECK(x8.num_exceptional() == 1);
  CHECK(x8.fiber_class() == cls("(1;1)"));

  CHECK(make_surface(4).anticanonical_class() == cls("(3;1,1,1,1,1)"));

  CHECK(code_of([] { make_surface(9); }) == ErrorCode::DegreeOutOfRange);
  CHECK(code_of([] { make_surface(2); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("intersection numbers of the standard classes") {
  const DelPezzoSurface x3(3);
  CHECK(intersect(cls("(2;1,1,1,0,0,0)"), cls("(2;1,1,1,0,0,0)"), x3) == 1);
  CHECK(intersect(x3.canonical_class(), x3.canonical_class(), x3) == 3);
  CHECK(intersect(make_surface(5).canonical_class(), make_surface(5).canonical_class()) == 5);

  for (int d = 3; d <= 8; ++d) {
    const DelPezzoSurface s(d);
    const DivisorClass h = s.anticanonical_class();
    CHECK(intersect(h, h, s) == d);
    CHECK(intersect(s.canonical_class(), s.canonical_class(), s) == d);
    CHECK(intersect(h, s.canonical_class(), s) == -d);
    // F is a conic-bundle fiber: F^2 = 0, K.F = -2, hence H.(K + F) = 2 - d.
    CHECK(intersect(s.fiber_class(), s.fiber_class(), s) == 0);
    CHECK(intersect(s.canonical_class(), s.fiber_class(), s) == -2);
    CHECK(intersect(h, s.canonical_class() + s.fiber_class(), s) == 2 - d);
    CHECK(intersect(s.line_class(), s.line_class(), s) == 1);
    for (int i = 1; i <= s.num_exceptional(); ++i) {
      CHECK(intersect(s.line_class(), s.exceptional_class(i), s) == 0);
      for (int j = 1; j <= s.num_exceptional(); ++j) {
        CHECK(intersect(s.exceptional_class(i), s.exceptional_class(j), s) == (i == j ? -1 : 0));
      }
    }
  }

  CHECK(code_of([] { intersect(cls("(1;0,0)"), cls("(1;0,0,0)")); }) == ErrorCode::LatticeMismatch);
  CHECK(code_of([] { intersect(cls("(1;0,0)"), cls("(1;0,0)"), make_surface(3)); }) ==
        ErrorCode::LatticeMismatch);
}

TEST_CASE("permuting exceptional curves") {
  const DivisorClass tb = cls("(2;1,1,1,0,0,0)");
  const std::vector<int> swap14{3, 1, 2, 0, 4, 5};
  CHECK(permute_exceptionals(tb, swap14) == cls("(2;0,1,1,1,0,0)"));

  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  CHECK(permute_exceptionals(tb, id) == tb);

  // Orbit of T_C: the "2" and the "0" can go to 6 * 5 places.
  const DivisorClass tc = cls("(3;2,1,1,1,1,0)");
  std::vector<DivisorClass> orbit;
  std::vector<int> p = id;
  do {
    orbit.push_back(permute_exceptionals(tc, p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  CHECK(orbit.size() == 30);

  CHECK(code_of([&] { permute_exceptionals(tb, std::vector<int>{0, 0, 1, 2, 3, 4}); }) ==
        ErrorCode::BadPermutation);
  CHECK(code_of([&] { permute_exceptionals(tb, std::vector<int>{0, 1, 2}); }) == ErrorCode::BadPermutation);
  CHECK(code_of([&] { permute_exceptionals(tb, std::vector<int>{0, 1, 2, 3, 4, 6}); }) ==
        ErrorCode::BadPermutation);
}

TEST_CASE("divisor text format") {
  CHECK(cls("(1;0,0,0,0,0,0)") == DivisorClass(1, std::vector<Integer>(6, 0)));
  CHECK(cls(" ( 5 ; 2, 2 ,2,2,2, 2 ) ") == DivisorClass(5, std::vector<Integer>(6, 2)));
  CHECK(cls("(-4;-2,-1,-1,-1,-1,0)").a() == -4);
  CHECK(format_divisor(cls("( -4 ; -2 , 1 )")) == "(-4;-2,1)");

  CHECK_THROWS_AS(parse_divisor("(2;1,1)", make_surface(3)), ParseError);
  try {
    parse_divisor("(2;1,x)");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(e.code() == ErrorCode::ParseError);
  }
  for (const char* bad : {"", "(", "(1)", "(1;)", "(1;2", "1;2)", "(1;2,)", "(1;2)x", "(--1;2)", "(1;2;3)"}) {
    CHECK_THROWS_AS(parse_divisor(bad), ParseError);
  }
}

TEST_CASE("lattice properties on random classes") {
  std::mt19937_64 rng(20240101);
  for (int n = 0; n < 1000; ++n) {
    const int d = oracle::random_degree(rng);
    const int t = 9 - d;
    const DivisorClass x = oracle::random_class(rng, t);
    const DivisorClass y = oracle::random_class(rng, t);
    const DivisorClass z = oracle::random_class(rng, t);

    CHECK(intersect(x + y, z) == intersect(x, z) + intersect(y, z));
    CHECK(intersect(x, y) == intersect(y, x));
    CHECK(intersect(x, y) == oracle::gram_intersect(x, y));

    std::vector<int> p(t);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(intersect(permute_exceptionals(x, p), permute_exceptionals(y, p)) == intersect(x, y));

    CHECK(parse_divisor(format_divisor(x)) == x);
  }
}
