#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ulrich_lab {

enum class ErrorCode {
  DegreeOutOfRange,
  LatticeMismatch,
  BadPermutation,
  ParseError,
  EmptySum,
  ParityViolation,
  NoKernel,
  OutOfTheoremScope,
  NotUlrich,
  NotUlrichCompatible,
  NonIntegerResult,
  InternalMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ulrich_lab
