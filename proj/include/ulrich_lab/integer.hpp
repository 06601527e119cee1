#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ulrich_lab {

// Ranks of iterated syzygy bundles grow geometrically in k, so every
// intersection number and Chern class is carried as an unbounded integer.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v);

/// n(n-1)/2, defined for every integer n.
inline Integer choose2(const Integer& n) { return n * (n - 1) / 2; }

std::optional<std::int64_t> to_int64(const Integer& v);

/// Parses an optionally signed decimal literal; nullopt on malformed input.
std::optional<Integer> parse_integer(std::string_view text);

}  // namespace ulrich_lab
