#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/cubic.hpp"
#include "ulrich_lab/syzygy.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace ulrich_lab {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings. Readers accept either form.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// {"rank": int, "c1": "(a;b1,...,bt)", "c2": int}
Json to_json(const BundleNumerics& f);
BundleNumerics bundle_from_json(const Json& j);

/// {"rank": int, "c1_sq": int, "c1_dot_H": int, "c2": int}
Json to_json(const NumericClassData& f);
NumericClassData numeric_from_json(const Json& j);

/// Either of the two forms above, told apart by the "c1" key.
SyzygySeed seed_from_json(const Json& j);
Json to_json(const SyzygySeed& seed);

/// {"n": int, "Hn": int, "HK": int}
Json to_json(const PolarizedData& p);
PolarizedData polarized_from_json(const Json& j);

/// {"d": int, "seed": {...}, "entries": [{"k", "rank", "c1_sq", "c1_dot_H",
/// "c2", "delta", "drift"}]}
Json to_json(const SyzygyTrace& trace);
/// Rebuilds the reduced entries; throws InvalidArgument when a stored delta or
/// drift disagrees with the stored Chern data.
SyzygyTrace trace_from_json(const Json& j);

struct DecompositionSet {
  DivisorClass target;
  int r = 0;
  std::vector<StableSumDecomposition> tuples;
};

/// {"target": "(a;b,...)", "r": int, "tuples": [["(..)", ...], ...], "count": int}
Json to_json(const DecompositionSet& set);
/// Throws InvalidArgument if a part is not a twisted cubic.
DecompositionSet decompositions_from_json(const Json& j);

/// Parses a JSON array of BundleNumerics (the seed-file format).
std::vector<BundleNumerics> seeds_from_json(const Json& j);

}  // namespace ulrich_lab
