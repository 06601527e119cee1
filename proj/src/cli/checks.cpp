#include "ulrich_lab/cli/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "ulrich_lab/cli/fixtures.hpp"
#include "ulrich_lab/cubic.hpp"
#include "ulrich_lab/error.hpp"
#include "ulrich_lab/json_io.hpp"
#include "ulrich_lab/syzygy.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace ulrich_lab::cli {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

DivisorClass random_class(Rng& rng, int t, int bound = 6) {
  std::vector<Integer> b(t);
  for (auto& v : b) v = uniform(rng, -bound, bound);
  return DivisorClass(uniform(rng, -bound, bound), std::move(b));
}

BundleNumerics random_bundle(Rng& rng, int t) {
  const int r = uniform(rng, 1, 4);
  return BundleNumerics(r, random_class(rng, t), r == 1 ? 0 : uniform(rng, -20, 20));
}

std::vector<int> random_permutation(Rng& rng, int t) {
  std::vector<int> p(t);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::string describe(const BundleNumerics& f) { return to_json(f).dump(); }

// Runs `body` for `cases` iterations; body returns an empty string on success
// or a description of the failure.
class Suite {
 public:
  Suite(const CheckOptions& options) : options_(options), rng_(options.rng_seed) {}

  void property(std::string module, std::string name, long cases, const std::function<std::string(Rng&, long)>& body) {
    PropertyResult r;
    r.module = std::move(module);
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    Rng rng(rng_());
    for (long i = 0; i < cases; ++i) {
      std::string failure;
      try {
        failure = body(rng, i);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      ++r.cases;
      if (!failure.empty()) {
        if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + failure;
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  long cases() const { return options_.cases; }
  const CheckOptions& options() const { return options_; }
  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  const CheckOptions& options_;
  Rng rng_;
  std::vector<PropertyResult> results_;
};

void picard_properties(Suite& suite) {
  suite.property("picard", "pairing is symmetric and bilinear", suite.cases(), [](Rng& rng, long) -> std::string {
    const int t = 9 - uniform(rng, 3, 8);
    const auto x = random_class(rng, t), y = random_class(rng, t), z = random_class(rng, t);
    const int m = uniform(rng, -5, 5), n = uniform(rng, -5, 5);
    if (intersect(x, y) != intersect(y, x)) return "asymmetric on " + format_divisor(x) + ", " + format_divisor(y);
    if (intersect(m * x + n * y, z) != m * intersect(x, z) + n * intersect(y, z)) {
      return "not linear at " + format_divisor(z);
    }
    return {};
  });

  suite.property("picard", "basis pairing, K and H", suite.cases(), [](Rng& rng, long) -> std::string {
    const DelPezzoSurface s(uniform(rng, 3, 8));
    const int t = s.num_exceptional();
    const auto l = s.line_class(), k = s.canonical_class(), h = s.anticanonical_class();
    if (intersect(l, l) != 1 || intersect(k, k) != s.degree() || intersect(h, k) != -s.degree()) {
      return "wrong basis pairing on X_" + std::to_string(s.degree());
    }
    for (int i = 1; i <= t; ++i) {
      for (int j = 1; j <= t; ++j) {
        if (intersect(s.exceptional_class(i), s.exceptional_class(j)) != (i == j ? -1 : 0)) return "E_i.E_j wrong";
      }
      if (intersect(l, s.exceptional_class(i)) != 0) return "L.E_i != 0";
    }
    const auto x = random_class(rng, t);
    Integer sum_b = 0;
    for (const auto& v : x.b()) sum_b += v;
    if (intersect(x, k) != -3 * x.a() + sum_b || intersect(x, h) != 3 * x.a() - sum_b) {
      return "K or H pairing wrong on " + format_divisor(x);
    }
    return {};
  });

  suite.property("picard", "permutations preserve the pairing", suite.cases(), [](Rng& rng, long) -> std::string {
    const DelPezzoSurface s(uniform(rng, 3, 8));
    const int t = s.num_exceptional();
    const auto p = random_permutation(rng, t);
    const auto x = random_class(rng, t), y = random_class(rng, t);
    if (intersect(permute_exceptionals(x, p), permute_exceptionals(y, p)) != intersect(x, y)) {
      return "pairing changed on " + format_divisor(x);
    }
    if (permute_exceptionals(s.canonical_class(), p) != s.canonical_class()) return "K not fixed";
    return {};
  });

  suite.property("picard", "parse(format(D)) = D", suite.cases(), [](Rng& rng, long) -> std::string {
    const DelPezzoSurface s(uniform(rng, 3, 8));
    const auto x = random_class(rng, s.num_exceptional(), 1000);
    const auto text = format_divisor(x);
    if (parse_divisor(text, s) != x) return "round trip failed for " + text;
    return {};
  });
}

void chern_properties(Suite& suite) {
  suite.property("chern", "tensor is commutative and associative", suite.cases(), [](Rng& rng, long) -> std::string {
    const int t = 9 - uniform(rng, 3, 8);
    const auto f = random_bundle(rng, t), g = random_bundle(rng, t), h = random_bundle(rng, t);
    if (tensor(f, g) != tensor(g, f)) return "f (x) g != g (x) f for " + describe(f) + ", " + describe(g);
    if (tensor(tensor(f, g), h) != tensor(f, tensor(g, h))) return "not associative";
    return {};
  });

  suite.property("chern", "direct sum is order-free and associative", suite.cases(), [](Rng& rng, long) -> std::string {
    const int t = 9 - uniform(rng, 3, 8);
    std::vector<BundleNumerics> fs;
    for (int i = uniform(rng, 1, 5); i > 0; --i) fs.push_back(random_bundle(rng, t));
    const auto total = direct_sum(fs);
    auto shuffled = fs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (direct_sum(shuffled) != total) return "order matters";
    const std::size_t cut = uniform(rng, 1, static_cast<int>(fs.size()));
    const std::vector<BundleNumerics> left(fs.begin(), fs.begin() + cut), right(fs.begin() + cut, fs.end());
    std::vector<BundleNumerics> nested{direct_sum(left)};
    if (!right.empty()) nested.push_back(direct_sum(right));
    if (direct_sum(nested) != total) return "regrouping changes the sum";
    return {};
  });

  suite.property("chern", "chi is additive on direct sums", suite.cases(), [](Rng& rng, long) -> std::string {
    const DelPezzoSurface s(uniform(rng, 3, 8));
    const auto f = random_bundle(rng, s.num_exceptional()), g = random_bundle(rng, s.num_exceptional());
    const std::vector<BundleNumerics> both{f, g};
    if (euler_char(direct_sum(both), s) != euler_char(f, s) + euler_char(g, s)) {
      return "chi(f + g) != chi(f) + chi(g) for " + describe(f) + ", " + describe(g);
    }
    return {};
  });

  suite.property("chern", "Delta and expected dim are twist-invariant", suite.cases(), [](Rng& rng, long) -> std::string {
    const int t = 9 - uniform(rng, 3, 8);
    const auto f = random_bundle(rng, t);
    const auto l = random_class(rng, t);
    const auto g = tensor_line(f, l);
    if (discriminant(g) != discriminant(f)) return "Delta moved under twist of " + describe(f);
    if (expected_moduli_dim(g) != expected_moduli_dim(f)) return "dim moved";
    return {};
  });

  suite.property("chern", "dual is an involution fixing Delta", suite.cases(), [](Rng& rng, long) -> std::string {
    const int t = 9 - uniform(rng, 3, 8);
    const auto f = random_bundle(rng, t);
    if (dual(dual(f)) != f) return "dual twice differs";
    if (dual(f).c1 != -f.c1 || discriminant(dual(f)) != discriminant(f)) return "dual data wrong";
    return {};
  });

  suite.property("chern", "reduced data follows the full class", suite.cases(), [](Rng& rng, long) -> std::string {
    const DelPezzoSurface s(uniform(rng, 3, 8));
    const auto f = random_bundle(rng, s.num_exceptional());
    const int m = uniform(rng, -4, 4);
    const auto lhs = numeric_data(tensor_line(f, m * s.anticanonical_class()), s);
    const auto rhs = twist_by_hyperplane(numeric_data(f, s), m, s.degree());
    if (lhs != rhs) return "twist mismatch for " + describe(f);
    if (euler_char(numeric_data(f, s)) != euler_char(f, s)) return "chi mismatch";
    if (numeric_data(dual(f), s) != dual(numeric_data(f, s))) return "dual mismatch";
    return {};
  });
}

void ulrich_properties(Suite& suite) {
  suite.property("ulrich", "criterion thresholds on X_3..X_8", 6, [](Rng&, long i) -> std::string {
    const int d = 3 + static_cast<int>(i);
    const auto p = polarization(DelPezzoSurface(d));
    if (koszul_criterion(p) != (d >= 4)) return "Koszul threshold wrong at d = " + std::to_string(d);
    if (!butler_semistability_criterion(p)) return "Butler fails at d = " + std::to_string(d);
    if (curve_section_genus(p).value != 1) return "genus != 1";
    if (coprime_stability_criterion(p) != butler_semistability_criterion(p)) return "coprime differs from Butler";
    if (prioritary_polarization_check(DelPezzoSurface(d)) >= 0) return "H.(K+F) not negative";
    return {};
  });

  suite.property("ulrich", "Ulrich candidates: twists vanish, permutation-invariant", suite.cases(),
                 [](Rng& rng, long) -> std::string {
                   const DelPezzoSurface s(uniform(rng, 3, 8));
                   const auto f = random_ulrich_candidate(rng, s, uniform(rng, 1, 4));
                   if (!is_ulrich_candidate(f, s)) return "generated candidate rejected: " + describe(f);
                   const auto h = s.anticanonical_class();
                   if (euler_char(tensor_line(f, -h), s) != 0 || euler_char(tensor_line(f, -2 * h), s) != 0) {
                     return "twists have chi != 0";
                   }
                   if (!is_ulrich_candidate(numeric_data(f, s), s)) return "reduced data rejected";
                   const auto p = random_permutation(rng, s.num_exceptional());
                   if (!is_ulrich_candidate(BundleNumerics(f.rank, permute_exceptionals(f.c1, p), f.c2), s)) {
                     return "not permutation-invariant";
                   }
                   if (is_ulrich_candidate(BundleNumerics(f.rank, f.c1, f.c2 + 1), s)) return "perturbed c2 accepted";
                   return {};
                 });

  suite.property("ulrich", "c2 on X_3 is (c1^2 - r)/2", suite.cases(), [](Rng& rng, long) -> std::string {
    const auto& s = cubic_surface();
    const int r = uniform(rng, 1, 6);
    const Integer c1_sq = 2 * uniform(rng, -50, 50) + r;
    if (ulrich_c2(r, c1_sq, s) * 2 != c1_sq - r) return "mismatch at r = " + std::to_string(r);
    return {};
  });
}

// Random Ulrich numerics for the rank-2 table: c1.H = 2d, c1^2 of matching parity.
NumericClassData random_rank2_numeric(Rng& rng, const DelPezzoSurface& s) {
  const Integer c1_sq = 2 * uniform(rng, -20, 2 * s.degree());
  return NumericClassData{2, c1_sq, 2 * s.degree(), ulrich_c2(2, c1_sq, s)};
}

void syzygy_properties(Suite& suite, const std::vector<BundleNumerics>& seeds) {
  suite.property("syzygy", "rank triangle: recurrence, closed form, iteration", 5 * 5, [](Rng&, long i) -> std::string {
    const int d = 4 + static_cast<int>(i / 5);
    const int r = 1 + static_cast<int>(i % 5);
    const DelPezzoSurface s(d);
    const Integer c1_sq = r * d;
    const NumericClassData seed{r, c1_sq, r * d, ulrich_c2(r, c1_sq, s)};
    const auto trace = iterate_syzygy(seed, s, 50);
    for (int k = -1; k <= 50; ++k) {
      const Integer rec = rank_by_recurrence(d, r, k);
      if (rank_closed_form(d, r, k) != rec || trace.at(k).data.rank != rec) {
        return "d=" + std::to_string(d) + " r=" + std::to_string(r) + " k=" + std::to_string(k);
      }
      if (d == 4 && rec != (2 * k + 3) * r) return "d = 4 linear form fails";
      if (k >= 0 && rec <= rank_by_recurrence(d, r, k - 1)) return "ranks not increasing";
    }
    return {};
  });

  const int k_oracle = suite.options().k_oracle;
  suite.property("syzygy", "cink_chern matches the iteration on shipped and supplied seeds",
                 static_cast<long>(seeds.size()), [&seeds, k_oracle](Rng&, long i) -> std::string {
                   const auto& seed = seeds[i];
                   const DelPezzoSurface s(degree_of(seed.c1));
                   if (!is_ulrich_candidate(seed, s)) return "seed is not an Ulrich candidate: " + describe(seed);
                   if (s.degree() == 3) return {};
                   const auto trace = iterate_syzygy(seed, s, k_oracle);
                   const auto h = s.anticanonical_class();
                   for (int k = -1; k <= k_oracle; ++k) {
                     const auto& step = *trace.at(k).bundle;
                     const auto g = k < 0 ? step : tensor_line(step, -h);
                     if (cink_chern(seed, s, k) != std::pair{g.c1, g.c2}) {
                       return "k=" + std::to_string(k) + " seed " + describe(seed);
                     }
                     if (cink_chern(numeric_data(seed, s), s, k) != numeric_data(g, s)) return "reduced form differs";
                   }
                   return {};
                 });

  suite.property("syzygy", "cink_chern matches the iteration on random seeds", suite.cases(),
                 [k_oracle](Rng& rng, long) -> std::string {
                   const DelPezzoSurface s(uniform(rng, 4, 8));
                   const auto seed = random_ulrich_candidate(rng, s, uniform(rng, 1, 4));
                   const int k = uniform(rng, -1, k_oracle);
                   const auto trace = iterate_syzygy(seed, s, std::max(k, 0));
                   const auto& step = *trace.at(k).bundle;
                   const auto g = k < 0 ? step : tensor_line(step, -s.anticanonical_class());
                   if (cink_chern(seed, s, k) != std::pair{g.c1, g.c2}) {
                     return "k=" + std::to_string(k) + " seed " + describe(seed);
                   }
                   return {};
                 });

  suite.property("syzygy", "intro_chern matches cink_chern in rank 2", suite.cases(),
                 [k_oracle](Rng& rng, long) -> std::string {
                   const DelPezzoSurface s(uniform(rng, 4, 7));
                   const auto seed = random_rank2_numeric(rng, s);
                   const int k = uniform(rng, -1, k_oracle);
                   if (intro_chern(s.degree(), seed.c1_sq, seed.c2, k) != cink_chern(seed, s, k)) {
                     return "d=" + std::to_string(s.degree()) + " c1^2=" + seed.c1_sq.str() + " k=" + std::to_string(k);
                   }
                   return {};
                 });

  suite.property("syzygy", "drift is constant and equals the seed dimension", suite.cases(),
                 [&seeds](Rng& rng, long i) -> std::string {
                   // Shipped seeds first, random candidates after.
                   const bool shipped = i < static_cast<long>(seeds.size()) && degree_of(seeds[i].c1) >= 4;
                   const DelPezzoSurface s(shipped ? degree_of(seeds[i].c1) : uniform(rng, 4, 8));
                   const NumericClassData seed =
                       numeric_data(shipped ? seeds[i] : random_ulrich_candidate(rng, s, uniform(rng, 1, 4)), s);
                   const auto trace = iterate_syzygy(seed, s, 30);
                   const auto drift = discriminant_drift(trace);
                   for (const auto& v : drift) {
                     if (v != expected_moduli_dim(seed)) return "drift " + v.str() + " on d=" + std::to_string(s.degree());
                   }
                   // Delta(S_k) grows strictly from some k on and stays that way.
                   const auto& e = trace.entries();
                   for (std::size_t j = e.size() - 10; j + 1 < e.size(); ++j) {
                     if (discriminant(e[j + 1].data) <= discriminant(e[j].data)) return "Delta not increasing";
                   }
                   return {};
                 });
}

void cubic_properties(Suite& suite) {
  const auto& cubics = twisted_cubics();
  const auto& s = cubic_surface();

  suite.property("cubic", "72 classes with T^2=1, T.H=3, T.K=-3, closed under permutations", suite.cases(),
                 [&](Rng& rng, long i) -> std::string {
                   if (i == 0) {
                     if (cubics.size() != 72) return "count " + std::to_string(cubics.size());
                     std::set<DivisorClass> distinct;
                     for (const auto& t : cubics) distinct.insert(t.cls);
                     if (distinct.size() != 72) return "duplicates";
                   }
                   const auto& t = cubics[uniform(rng, 0, 71)];
                   if (intersect(t.cls, t.cls) != 1 || intersect(t.cls, s.anticanonical_class()) != 3 ||
                       intersect(t.cls, s.canonical_class()) != -3) {
                     return "bad invariants for " + format_divisor(t.cls);
                   }
                   const auto moved = permute_exceptionals(t.cls, random_permutation(rng, 6));
                   if (!is_twisted_cubic(moved)) return "orbit leaves the set at " + format_divisor(moved);
                   return {};
                 });

  suite.property("cubic", "r=2 decompositions are exactly the pairs with T1.T2 >= 3", 72, [&](Rng&, long i) -> std::string {
    const auto& t1 = cubics[i];
    for (const auto& t2 : cubics) {
      const auto found = decompose_stable_sum(t1.cls + t2.cls, 2);
      const bool listed = std::any_of(found.begin(), found.end(), [&](const StableSumDecomposition& dec) {
        return dec.parts[0] == t1 && dec.parts[1] == t2;
      });
      if (listed != (intersect(t1.cls, t2.cls) >= 3)) {
        return format_divisor(t1.cls) + " + " + format_divisor(t2.cls);
      }
      for (const auto& dec : found) {
        if (!satisfies_stable_sum_conditions(dec.parts, dec.target)) return "returned tuple fails the conditions";
      }
    }
    return {};
  });

  suite.property("cubic", "sampled r=3 tuples are found iff they qualify; chi closed form = oracle", suite.cases(),
                 [&](Rng& rng, long) -> std::string {
                   std::vector<TwistedCubicClass> parts;
                   for (int i = 0; i < 3; ++i) parts.push_back(cubics[uniform(rng, 0, 71)]);
                   DivisorClass target = parts[0].cls + parts[1].cls + parts[2].cls;
                   const auto found = decompose_stable_sum(target, 3);
                   const bool listed = std::any_of(found.begin(), found.end(),
                                                   [&](const StableSumDecomposition& dec) { return dec.parts == parts; });
                   if (listed != satisfies_stable_sum_conditions(parts, target)) return "membership disagrees";
                   if (!found.empty()) {
                     const auto& dec = found[uniform(rng, 0, static_cast<int>(found.size()) - 1)];
                     if (!satisfies_stable_sum_conditions(dec.parts, target)) return "returned tuple fails";
                     for (int j = 2; j <= 3; ++j) {
                       std::vector<Integer> pairings;
                       for (int i = 0; i < j - 1; ++i) pairings.push_back(intersect(dec.parts[i].cls, dec.parts[j - 1].cls));
                       const auto fprev = syzygy_sum(std::span(dec.parts).first(j - 1));
                       if (chi_pair_oracle(fprev, dec.parts[j - 1]) != chi_pair_closed_form(j, pairings)) {
                         return "chi mismatch at j=" + std::to_string(j);
                       }
                     }
                   }
                   return {};
                 });

  suite.property("cubic", "moduli partner dimensions agree", suite.cases(), [&](Rng& rng, long) -> std::string {
    const auto f = random_ulrich_candidate(rng, s, uniform(rng, 2, 4));
    const auto pair = cubic_moduli_pair(f);
    const Integer c1_sq = intersect(f.c1, f.c1);
    if (f.c2 + f.rank != c1_sq - f.c2) return "c2 + r != c1^2 - c2 for " + describe(f);
    if (pair.dim != c1_sq - 2 * f.rank * f.rank + 1) return "dim formula";
    if (expected_moduli_dim(pair.partner) != pair.dim) return "partner dimension";
    if (expected_moduli_dim(f) != pair.dim) return "E and partner differ in dimension";
    return {};
  });
}

void json_properties(Suite& suite) {
  suite.property("cli", "JSON round trips", suite.cases(), [](Rng& rng, long i) -> std::string {
    const DelPezzoSurface s(uniform(rng, 4, 8));
    const auto f = random_bundle(rng, s.num_exceptional());
    if (bundle_from_json(Json::parse(to_json(f).dump())) != f) return "bundle " + describe(f);
    const auto n = numeric_data(f, s);
    if (numeric_from_json(Json::parse(to_json(n).dump())) != n) return "numeric data";
    if (i % 20 == 0) {
      const auto seed = random_ulrich_candidate(rng, s, uniform(rng, 1, 3));
      const auto trace = iterate_syzygy(seed, s, 60);
      const auto back = trace_from_json(Json::parse(to_json(trace).dump()));
      if (to_json(back) != to_json(trace)) return "trace";
      const auto& c = twisted_cubics();
      const auto target = c[uniform(rng, 0, 71)].cls + c[uniform(rng, 0, 71)].cls;
      const DecompositionSet set{target, 2, decompose_stable_sum(target, 2)};
      if (to_json(decompositions_from_json(Json::parse(to_json(set).dump()))) != to_json(set)) return "decompositions";
    }
    return {};
  });
}

}  // namespace

BundleNumerics random_ulrich_candidate(std::mt19937_64& rng, const DelPezzoSurface& s, int r) {
  const int t = s.num_exceptional();
  std::vector<Integer> b(t);
  Integer sum_b = 0;
  for (auto& v : b) {
    v = uniform(rng, -2, 2 * r + 1);
    sum_b += v;
  }
  // 3a - sum b = r d needs r d + sum b divisible by 3.
  while ((r * s.degree() + sum_b) % 3 != 0) {
    b[0] += 1;
    sum_b += 1;
  }
  DivisorClass c1((r * s.degree() + sum_b) / 3, std::move(b));
  const Integer c1_sq = intersect(c1, c1);
  return BundleNumerics(r, std::move(c1), ulrich_c2(r, c1_sq, s));
}

std::vector<PropertyResult> run_property_checks(const CheckOptions& options) {
  std::vector<BundleNumerics> seeds = shipped_seeds();
  seeds.insert(seeds.end(), options.extra_seeds.begin(), options.extra_seeds.end());

  Suite suite(options);
  picard_properties(suite);
  chern_properties(suite);
  ulrich_properties(suite);
  syzygy_properties(suite, seeds);
  cubic_properties(suite);
  json_properties(suite);
  return suite.take();
}

}  // namespace ulrich_lab::cli
