#include "ulrich_lab/integer.hpp"

#include <limits>

#include "ulrich_lab/error.hpp"

namespace ulrich_lab {

std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<std::int64_t> to_int64(const Integer& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return std::nullopt;
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptySum: return "EmptySum";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NoKernel: return "NoKernel";
    case ErrorCode::OutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::NotUlrich: return "NotUlrich";
    case ErrorCode::NotUlrichCompatible: return "NotUlrichCompatible";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ulrich_lab
