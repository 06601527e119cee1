#include "ulrich_lab/cubic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "ulrich_lab/error.hpp"
#include "ulrich_lab/syzygy.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace ulrich_lab {

namespace {

constexpr int kCubicT = 6;

DivisorClass make_class(int a, std::array<int, kCubicT> b) {
  return DivisorClass(a, std::vector<Integer>(b.begin(), b.end()));
}

std::vector<TwistedCubicClass> enumerate_twisted_cubics() {
  std::vector<TwistedCubicClass> out;
  for (CubicType type : {CubicType::A, CubicType::B, CubicType::C, CubicType::D, CubicType::E}) {
    const DivisorClass rep = twisted_cubic_representative(type);
    std::vector<Integer> b = rep.b();
    std::sort(b.begin(), b.end());
    do {
      out.push_back({DivisorClass(rep.a(), b), type});
    } while (std::next_permutation(b.begin(), b.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Fixed-width coordinates for the search; every twisted cubic has
// 1 <= a <= 5 and 0 <= b_i <= 2.
struct SmallClass {
  int a = 0;
  std::array<int, kCubicT> b{};
};

int pair(const SmallClass& x, const SmallClass& y) {
  int v = x.a * y.a;
  for (int i = 0; i < kCubicT; ++i) v -= x.b[i] * y.b[i];
  return v;
}

std::optional<SmallClass> to_small(const DivisorClass& d) {
  SmallClass s;
  auto narrow = [](const Integer& v) -> std::optional<int> {
    if (v < -1000 || v > 1000) return std::nullopt;
    return static_cast<int>(v);
  };
  const auto a = narrow(d.a());
  if (!a) return std::nullopt;
  s.a = *a;
  for (int i = 0; i < kCubicT; ++i) {
    const auto bi = narrow(d.b()[i]);
    if (!bi) return std::nullopt;
    s.b[i] = *bi;
  }
  return s;
}

// Whether `rest` could still be a sum of m twisted cubics.
bool feasible(const SmallClass& rest, int m) {
  if (rest.a < m || rest.a > 5 * m) return false;
  for (int v : rest.b) {
    if (v < 0 || v > 2 * m) return false;
  }
  return true;
}

class StableSumSearch {
 public:
  StableSumSearch(const std::vector<TwistedCubicClass>& cubics, int r) : r_(r) {
    for (const auto& t : cubics) small_.push_back(*to_small(t.cls));
  }

  std::vector<std::vector<int>> run(const SmallClass& target) {
    chosen_.clear();
    found_.clear();
    dfs(SmallClass{}, target);
    return std::move(found_);
  }

 private:
  void dfs(const SmallClass& partial, const SmallClass& rest) {
    const int placed = static_cast<int>(chosen_.size());
    if (placed == r_) {
      if (rest.a == 0 && std::all_of(rest.b.begin(), rest.b.end(), [](int v) { return v == 0; })) {
        found_.push_back(chosen_);
      }
      return;
    }
    for (int idx = 0; idx < static_cast<int>(small_.size()); ++idx) {
      const SmallClass& t = small_[idx];
      // Position j = placed + 1 needs (T_1 + ... + T_{j-1}).T_j >= 2j - 1.
      if (placed >= 1 && pair(partial, t) < 2 * placed + 1) continue;
      SmallClass next_rest = rest;
      SmallClass next_partial = partial;
      next_rest.a -= t.a;
      next_partial.a += t.a;
      for (int i = 0; i < kCubicT; ++i) {
        next_rest.b[i] -= t.b[i];
        next_partial.b[i] += t.b[i];
      }
      if (!feasible(next_rest, r_ - placed - 1)) continue;
      chosen_.push_back(idx);
      dfs(next_partial, next_rest);
      chosen_.pop_back();
    }
  }

  int r_;
  std::vector<SmallClass> small_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::string_view to_string(CubicType type) {
  switch (type) {
    case CubicType::A: return "A";
    case CubicType::B: return "B";
    case CubicType::C: return "C";
    case CubicType::D: return "D";
    case CubicType::E: return "E";
  }
  return "?";
}

std::strong_ordering operator<=>(const TwistedCubicClass& x, const TwistedCubicClass& y) {
  if (x.type != y.type) return x.type <=> y.type;
  return x.cls <=> y.cls;
}

const DelPezzoSurface& cubic_surface() {
  static const DelPezzoSurface s(3);
  return s;
}

DivisorClass twisted_cubic_representative(CubicType type) {
  switch (type) {
    case CubicType::A: return make_class(1, {0, 0, 0, 0, 0, 0});
    case CubicType::B: return make_class(2, {1, 1, 1, 0, 0, 0});
    case CubicType::C: return make_class(3, {2, 1, 1, 1, 1, 0});
    case CubicType::D: return make_class(4, {2, 2, 2, 1, 1, 1});
    case CubicType::E: return make_class(5, {2, 2, 2, 2, 2, 2});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown twisted cubic type");
}

DivisorClass twisted_cubic_b_prime() { return make_class(2, {0, 0, 0, 1, 1, 1}); }

const std::vector<TwistedCubicClass>& twisted_cubics() {
  static const std::vector<TwistedCubicClass> all = enumerate_twisted_cubics();
  return all;
}

bool is_twisted_cubic(const DivisorClass& d) {
  if (d.num_exceptional() != kCubicT) return false;
  const auto& all = twisted_cubics();
  return std::any_of(all.begin(), all.end(), [&](const TwistedCubicClass& t) { return t.cls == d; });
}

bool satisfies_stable_sum_conditions(std::span<const TwistedCubicClass> parts, const DivisorClass& target) {
  if (parts.empty()) return false;
  DivisorClass partial = DivisorClass::zero(target.num_exceptional());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    // 0-based j is position j + 1.
    if (j >= 1 && intersect(partial, parts[j].cls) < Integer(2 * j + 1)) return false;
    partial += parts[j].cls;
  }
  return partial == target;
}

std::vector<StableSumDecomposition> decompose_stable_sum(const DivisorClass& target, int r,
                                                         DecompositionMode mode) {
  if (r < 2 || r > kMaxDecompositionParts) {
    throw Error(ErrorCode::InvalidArgument, "number of parts must lie in [2, 6], got " + std::to_string(r));
  }
  cubic_surface().require_on_surface(target);
  std::vector<StableSumDecomposition> out;
  if (intersect(target, cubic_surface().anticanonical_class()) != 3 * r) return out;
  const auto small_target = to_small(target);
  if (!small_target) return out;

  const auto& cubics = twisted_cubics();
  std::set<std::vector<int>> seen_multisets;
  for (auto& tuple : StableSumSearch(cubics, r).run(*small_target)) {
    if (mode == DecompositionMode::Unordered) {
      std::vector<int> key = tuple;
      std::sort(key.begin(), key.end());
      if (!seen_multisets.insert(std::move(key)).second) continue;
    }
    StableSumDecomposition dec{{}, target};
    for (int idx : tuple) dec.parts.push_back(cubics[idx]);
    out.push_back(std::move(dec));
  }
  return out;
}

Integer chi_pair_closed_form(int j, std::span<const Integer> pairings) {
  if (j < 1 || static_cast<int>(pairings.size()) != j - 1) {
    throw Error(ErrorCode::InvalidArgument, "expected j - 1 pairings");
  }
  Integer chi = 2 * (j - 1);
  for (const auto& p : pairings) chi -= p;
  return chi;
}

namespace {

BundleNumerics cubic_syzygy(const TwistedCubicClass& t) {
  const Integer h0 = ulrich_profile(1, polarization(cubic_surface())).h0;
  return syzygy_numerics(line_bundle(t.cls), h0);
}

}  // namespace

Integer chi_pair_oracle(const BundleNumerics& fprev, const TwistedCubicClass& t) {
  if (fprev.rank % 2 != 0) throw Error(ErrorCode::InvalidArgument, "F_{j-1} must have even rank");
  return euler_char(tensor(dual(fprev), cubic_syzygy(t)), cubic_surface());
}

BundleNumerics syzygy_sum(std::span<const TwistedCubicClass> parts) {
  std::vector<BundleNumerics> kernels;
  kernels.reserve(parts.size());
  for (const auto& t : parts) kernels.push_back(cubic_syzygy(t));
  return direct_sum(kernels);
}

CubicModuliPair cubic_moduli_pair(const BundleNumerics& f) {
  const DelPezzoSurface& s = cubic_surface();
  if (f.rank < 2 || !is_ulrich_candidate(f, s)) {
    throw Error(ErrorCode::NotUlrich, "expected an Ulrich candidate of rank >= 2 on X_3");
  }
  const Integer h0 = ulrich_profile(f.rank, polarization(s)).h0;
  BundleNumerics partner = syzygy_numerics(f, h0);
  if (partner.c2 != f.c2 + f.rank) {
    throw Error(ErrorCode::InternalMismatch, "c1^2 - c2 differs from c2 + r");
  }
  const Integer c1_sq = intersect(f.c1, f.c1);
  Integer dim = c1_sq - 2 * f.rank * f.rank + 1;
  if (expected_moduli_dim(partner) != dim || expected_moduli_dim(f) != dim) {
    throw Error(ErrorCode::InternalMismatch, "moduli dimensions disagree");
  }
  return {std::move(partner), std::move(dim)};
}

BundleNumerics corcubic_row(const BundleNumerics& base, const DivisorClass& twist) {
  if (base.rank != 4) throw Error(ErrorCode::InvalidArgument, "expected a rank-4 bundle");
  return tensor_line(base, twist);
}

}  // namespace ulrich_lab
