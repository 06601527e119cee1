#include "ulrich_lab/json_io.hpp"

#include "ulrich_lab/error.hpp"

namespace ulrich_lab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidArgument, std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

int small_int(const Json& j, const char* key) {
  const auto v = to_int64(integer_from_json(field(j, key)));
  if (!v || *v < INT32_MIN || *v > INT32_MAX) {
    throw Error(ErrorCode::InvalidArgument, std::string("field \"") + key + "\" out of range");
  }
  return static_cast<int>(*v);
}

DivisorClass divisor_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "divisor class must be a string");
  return parse_divisor(j.get<std::string>());
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (const auto small = to_int64(v)) return *small;
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    if (auto v = parse_integer(j.get<std::string>())) return *v;
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

Json to_json(const BundleNumerics& f) {
  return Json{{"rank", integer_to_json(f.rank)}, {"c1", format_divisor(f.c1)}, {"c2", integer_to_json(f.c2)}};
}

BundleNumerics bundle_from_json(const Json& j) {
  return BundleNumerics(integer_from_json(field(j, "rank")), divisor_from_json(field(j, "c1")),
                        integer_from_json(field(j, "c2")));
}

Json to_json(const NumericClassData& f) {
  return Json{{"rank", integer_to_json(f.rank)},
              {"c1_sq", integer_to_json(f.c1_sq)},
              {"c1_dot_H", integer_to_json(f.c1_dot_H)},
              {"c2", integer_to_json(f.c2)}};
}

NumericClassData numeric_from_json(const Json& j) {
  return {integer_from_json(field(j, "rank")), integer_from_json(field(j, "c1_sq")),
          integer_from_json(field(j, "c1_dot_H")), integer_from_json(field(j, "c2"))};
}

SyzygySeed seed_from_json(const Json& j) {
  if (j.is_object() && j.contains("c1")) return bundle_from_json(j);
  return numeric_from_json(j);
}

Json to_json(const SyzygySeed& seed) {
  return std::visit([](const auto& s) { return to_json(s); }, seed);
}

Json to_json(const PolarizedData& p) {
  return Json{{"n", p.n()}, {"Hn", integer_to_json(p.Hn())}, {"HK", integer_to_json(p.HK())}};
}

PolarizedData polarized_from_json(const Json& j) {
  return PolarizedData(small_int(j, "n"), integer_from_json(field(j, "Hn")), integer_from_json(field(j, "HK")));
}

Json to_json(const SyzygyTrace& trace) {
  Json entries = Json::array();
  const auto drift = discriminant_drift(trace);
  for (std::size_t i = 0; i < trace.entries().size(); ++i) {
    const SyzygyStep& step = trace.entries()[i];
    entries.push_back(Json{{"k", step.k},
                           {"rank", integer_to_json(step.data.rank)},
                           {"c1_sq", integer_to_json(step.data.c1_sq)},
                           {"c1_dot_H", integer_to_json(step.data.c1_dot_H)},
                           {"c2", integer_to_json(step.data.c2)},
                           {"delta", integer_to_json(discriminant(step.data))},
                           {"drift", integer_to_json(drift[i])}});
  }
  return Json{{"d", trace.surface().degree()}, {"seed", to_json(trace.seed())}, {"entries", std::move(entries)}};
}

SyzygyTrace trace_from_json(const Json& j) {
  const DelPezzoSurface s(small_int(j, "d"));
  SyzygySeed seed = seed_from_json(field(j, "seed"));
  std::vector<SyzygyStep> steps;
  for (const Json& e : field(j, "entries")) {
    SyzygyStep step;
    step.k = small_int(e, "k");
    step.data = numeric_from_json(e);
    if (step.k != static_cast<int>(steps.size()) - 1) {
      throw Error(ErrorCode::InvalidArgument, "trace entries must run k = -1, 0, 1, ...");
    }
    const Integer delta = discriminant(step.data);
    if (e.contains("delta") && integer_from_json(e.at("delta")) != delta) {
      throw Error(ErrorCode::InvalidArgument, "stored delta disagrees at k = " + std::to_string(step.k));
    }
    if (e.contains("drift") &&
        integer_from_json(e.at("drift")) != delta - (step.data.rank * step.data.rank - 1)) {
      throw Error(ErrorCode::InvalidArgument, "stored drift disagrees at k = " + std::to_string(step.k));
    }
    steps.push_back(std::move(step));
  }
  if (steps.empty()) throw Error(ErrorCode::InvalidArgument, "trace has no entries");
  if (const auto* b = std::get_if<BundleNumerics>(&seed)) steps.front().bundle = *b;
  return SyzygyTrace(s, std::move(seed), std::move(steps));
}

Json to_json(const DecompositionSet& set) {
  Json tuples = Json::array();
  for (const auto& dec : set.tuples) {
    Json parts = Json::array();
    for (const auto& t : dec.parts) parts.push_back(format_divisor(t.cls));
    tuples.push_back(std::move(parts));
  }
  return Json{{"target", format_divisor(set.target)},
              {"r", set.r},
              {"tuples", std::move(tuples)},
              {"count", set.tuples.size()}};
}

DecompositionSet decompositions_from_json(const Json& j) {
  DecompositionSet set{divisor_from_json(field(j, "target")), small_int(j, "r"), {}};
  const auto& cubics = twisted_cubics();
  for (const Json& tuple : field(j, "tuples")) {
    StableSumDecomposition dec{{}, set.target};
    for (const Json& part : tuple) {
      const DivisorClass cls = divisor_from_json(part);
      const auto it = std::find_if(cubics.begin(), cubics.end(),
                                   [&](const TwistedCubicClass& t) { return t.cls == cls; });
      if (it == cubics.end()) {
        throw Error(ErrorCode::InvalidArgument, format_divisor(cls) + " is not a twisted cubic");
      }
      dec.parts.push_back(*it);
    }
    set.tuples.push_back(std::move(dec));
  }
  if (j.contains("count") && integer_from_json(j.at("count")) != set.tuples.size()) {
    throw Error(ErrorCode::InvalidArgument, "count disagrees with the tuple list");
  }
  return set;
}

std::vector<BundleNumerics> seeds_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "seed file must hold a JSON array");
  std::vector<BundleNumerics> seeds;
  for (const Json& e : j) seeds.push_back(bundle_from_json(e));
  return seeds;
}

}  // namespace ulrich_lab
