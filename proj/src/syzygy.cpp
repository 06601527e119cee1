#include "ulrich_lab/syzygy.hpp"

#include "ulrich_lab/error.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace ulrich_lab {

namespace {

void require_k(int k) {
  if (k < -1) throw Error(ErrorCode::InvalidArgument, "k must be >= -1, got " + std::to_string(k));
}

void require_scope(const DelPezzoSurface& s, int k) {
  if (s.degree() == 3 && k >= 1) {
    throw Error(ErrorCode::OutOfTheoremScope,
                "iterated syzygy bundles beyond S_0 are not covered on cubic surfaces (k = " +
                    std::to_string(k) + ")");
  }
}

Integer sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Per-representation hooks for the generic iteration below.
Integer chi(const BundleNumerics& f, const DelPezzoSurface& s) { return euler_char(f, s); }
Integer chi(const NumericClassData& f, const DelPezzoSurface&) { return euler_char(f); }

BundleNumerics twist_h(const BundleNumerics& f, const DelPezzoSurface& s) {
  return tensor_line(f, s.anticanonical_class());
}
NumericClassData twist_h(const NumericClassData& f, const DelPezzoSurface& s) {
  return twist_by_hyperplane(f, 1, s.degree());
}

SyzygyStep make_step(int k, const BundleNumerics& f, const DelPezzoSurface& s) {
  return {k, numeric_data(f, s), f};
}
SyzygyStep make_step(int k, const NumericClassData& f, const DelPezzoSurface&) {
  return {k, f, std::nullopt};
}

template <typename Numerics>
SyzygyTrace iterate(const Numerics& seed, const DelPezzoSurface& s, int k_max) {
  require_k(k_max);
  require_scope(s, k_max);
  if (!is_ulrich_candidate(seed, s)) {
    throw Error(ErrorCode::NotUlrich, "seed fails the Ulrich numerical conditions");
  }
  std::vector<SyzygyStep> entries;
  entries.reserve(k_max + 2);
  entries.push_back(make_step(-1, seed, s));
  Numerics current = seed;
  for (int k = 0; k <= k_max; ++k) {
    const Integer h0 = chi(current, s);
    current = twist_h(syzygy_numerics(current, h0), s);
    const Integer expected = rank_by_recurrence(s.degree(), seed.rank, k);
    if (current.rank != expected) {
      throw Error(ErrorCode::InternalMismatch, "rank of S_" + std::to_string(k) + " is " +
                                                   current.rank.str() + ", recurrence gives " +
                                                   expected.str());
    }
    entries.push_back(make_step(k, current, s));
  }
  return SyzygyTrace(s, seed, std::move(entries));
}

// Coefficient m_k of H in c1(S_k(-H)) = (-1)^{k+1} c1(E) + m_k H.
Integer hyperplane_coefficient(const std::vector<Integer>& ranks, int k) {
  Integer m = 0;
  for (int i = 0; i < k; ++i) m += sign(k + i) * ranks[i];
  return m;
}

// Unrolls c2(M_S) = c1(S)^2 - c2(S) with S = G (x) H, G = S(-H):
//   c2(G_k) = sum_{i<k} (-1)^{k+i+1} [c1(G_i)^2 + (N_i + 1) c1(G_i).H + C(N_i + 1, 2) d]
//             + (-1)^k (c1(E)^2 - c2(E)).
// The per-step data c1(G_i)^2, c1(G_i).H are supplied by the caller.
template <typename C1Data>
Integer unrolled_c2(int k, int d, const std::vector<Integer>& ranks, const Integer& seed_c1_sq,
                    const Integer& seed_c2, C1Data&& c1_data) {
  Integer c2 = sign(k) * (seed_c1_sq - seed_c2);
  for (int i = 0; i < k; ++i) {
    const auto [sq, dot_h] = c1_data(i);
    c2 += sign(k + i + 1) * (sq + (ranks[i] + 1) * dot_h + choose2(ranks[i] + 1) * d);
  }
  return c2;
}

std::vector<Integer> recurrence_ranks(int d, const Integer& r, int k) {
  std::vector<Integer> ranks;
  for (int i = 0; i <= k; ++i) ranks.push_back(rank_by_recurrence(d, r, i));
  return ranks;
}

}  // namespace

BundleNumerics syzygy_numerics(const BundleNumerics& f, const Integer& h0) {
  if (h0 <= f.rank) {
    throw Error(ErrorCode::NoKernel, "h0 = " + h0.str() + " does not exceed rank " + f.rank.str());
  }
  return BundleNumerics(h0 - f.rank, -f.c1, intersect(f.c1, f.c1) - f.c2);
}

NumericClassData syzygy_numerics(const NumericClassData& f, const Integer& h0) {
  if (h0 <= f.rank) {
    throw Error(ErrorCode::NoKernel, "h0 = " + h0.str() + " does not exceed rank " + f.rank.str());
  }
  return {h0 - f.rank, f.c1_sq, -f.c1_dot_H, f.c1_sq - f.c2};
}

Integer rank_by_recurrence(int degree, const Integer& r, int k) {
  const DelPezzoSurface s(degree);
  require_k(k);
  Integer prev = r;
  if (k == -1) return prev;
  Integer cur = r * (degree - 1);
  for (int i = 1; i <= k; ++i) {
    Integer next = (degree - 2) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QuadraticNumber rank_closed_form_exact(int degree, const Integer& r, int k) {
  const DelPezzoSurface s(degree);
  require_k(k);
  if (degree < 5) {
    throw Error(ErrorCode::OutOfTheoremScope, "quadratic-field closed form needs d >= 5");
  }
  const Integer radicand = Integer(degree) * (degree - 4);
  const QuadraticNumber root = QuadraticNumber::sqrt_of(radicand);
  const QuadraticNumber half_trace = QuadraticNumber::rational(Rational(degree - 2, 2), radicand);
  const QuadraticNumber half = QuadraticNumber::rational(Rational(1, 2), radicand);
  const QuadraticNumber alpha1 = half_trace + half * root;
  const QuadraticNumber alpha2 = half_trace - half * root;
  const QuadraticNumber numerator = (alpha2.pow(-(k + 2)) + alpha2.pow(-(k + 1))) -
                                    (alpha1.pow(-(k + 2)) + alpha1.pow(-(k + 1)));
  return QuadraticNumber::rational(Rational(r), radicand) * numerator / root;
}

Integer rank_closed_form(int degree, const Integer& r, int k) {
  const DelPezzoSurface s(degree);
  require_k(k);
  if (degree == 3) throw Error(ErrorCode::OutOfTheoremScope, "no closed form on cubic surfaces");
  if (degree == 4) return (2 * k + 3) * r;
  const QuadraticNumber value = rank_closed_form_exact(degree, r, k);
  if (!value.is_rational() || boost::multiprecision::denominator(value.rational_part()) != 1) {
    throw Error(ErrorCode::NonIntegerResult, "closed form evaluated to " + value.to_string());
  }
  return boost::multiprecision::numerator(value.rational_part());
}

SyzygyTrace::SyzygyTrace(DelPezzoSurface surface, SyzygySeed seed, std::vector<SyzygyStep> entries)
    : surface_(surface), seed_(std::move(seed)), entries_(std::move(entries)) {}

const SyzygyStep& SyzygyTrace::at(int k) const {
  if (k < -1 || k > k_max()) {
    throw Error(ErrorCode::InvalidArgument, "trace has no entry for k = " + std::to_string(k));
  }
  return entries_[k + 1];
}

SyzygyTrace iterate_syzygy(const BundleNumerics& seed, const DelPezzoSurface& s, int k_max) {
  return iterate(seed, s, k_max);
}

SyzygyTrace iterate_syzygy(const NumericClassData& seed, const DelPezzoSurface& s, int k_max) {
  return iterate(seed, s, k_max);
}

std::pair<DivisorClass, Integer> cink_chern(const BundleNumerics& seed, const DelPezzoSurface& s,
                                            int k) {
  require_k(k);
  require_scope(s, k);
  if (!is_ulrich_candidate(seed, s)) {
    throw Error(ErrorCode::NotUlrich, "seed fails the Ulrich numerical conditions");
  }
  if (k == -1) return {seed.c1, seed.c2};
  const DivisorClass h = s.anticanonical_class();
  const std::vector<Integer> ranks = recurrence_ranks(s.degree(), seed.rank, k);
  auto c1_at = [&](int i) { return sign(i + 1) * seed.c1 + hyperplane_coefficient(ranks, i) * h; };
  const Integer c2 = unrolled_c2(k, s.degree(), ranks, intersect(seed.c1, seed.c1), seed.c2, [&](int i) {
    const DivisorClass c1 = c1_at(i);
    return std::pair{intersect(c1, c1), intersect(c1, h)};
  });
  return {c1_at(k), c2};
}

NumericClassData cink_chern(const NumericClassData& seed, const DelPezzoSurface& s, int k) {
  require_k(k);
  require_scope(s, k);
  if (!is_ulrich_candidate(seed, s)) {
    throw Error(ErrorCode::NotUlrich, "seed fails the Ulrich numerical conditions");
  }
  if (k == -1) return seed;
  const int d = s.degree();
  const std::vector<Integer> ranks = recurrence_ranks(d, seed.rank, k);
  auto c1_at = [&](int i) {
    const Integer eps = sign(i + 1);
    const Integer m = hyperplane_coefficient(ranks, i);
    return std::pair{Integer(seed.c1_sq + 2 * eps * m * seed.c1_dot_H + m * m * d),
                     Integer(eps * seed.c1_dot_H + m * d)};
  };
  const auto [sq, dot_h] = c1_at(k);
  return {ranks[k], sq, dot_h, unrolled_c2(k, d, ranks, seed.c1_sq, seed.c2, c1_at)};
}

NumericClassData intro_chern(int degree, const Integer& c1_sq, const Integer& c2, int k) {
  require_k(k);
  if (degree < 4 || degree > 7) {
    throw Error(ErrorCode::OutOfTheoremScope, "v_{d,k} is tabulated for 4 <= d <= 7 only");
  }
  const Integer c1_dot_h = 2 * degree;
  if (k == -1) return {2, c1_sq, c1_dot_h, c2};
  std::vector<Integer> n;
  for (int i = 0; i <= k; ++i) n.push_back(rank_closed_form(degree, 2, i));

  // c_{1,{d,i}} = (-1)^{i+1} c1 + (sum_{j<i} (-1)^{i+j} N_{d,j}) H_d.
  auto c1_data = [&](int i) {
    Integer h_coeff = 0;
    for (int j = 0; j < i; ++j) h_coeff += sign(i + j) * n[j];
    const Integer eps = sign(i + 1);
    return std::pair{Integer(c1_sq + 2 * eps * h_coeff * c1_dot_h + h_coeff * h_coeff * degree),
                     Integer(eps * c1_dot_h + h_coeff * degree)};
  };
  Integer c2_k = sign(k) * (c1_sq - c2);
  for (int i = 0; i < k; ++i) {
    const auto [sq, dot_h] = c1_data(i);
    c2_k += sign(k + i + 1) * sq + sign(k + i + 1) * (n[i] + 1) * dot_h +
            sign(k + i + 1) * degree * (n[i] * n[i] - choose2(n[i]));
  }
  const auto [sq, dot_h] = c1_data(k);
  return {n[k], sq, dot_h, c2_k};
}

std::vector<Integer> discriminant_drift(const SyzygyTrace& trace) {
  std::vector<Integer> drift;
  drift.reserve(trace.entries().size());
  for (const auto& step : trace.entries()) {
    drift.push_back(discriminant(step.data) - (step.data.rank * step.data.rank - 1));
  }
  return drift;
}

}  // namespace ulrich_lab
