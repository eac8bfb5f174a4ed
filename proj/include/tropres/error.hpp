#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropres {

enum class ErrorKind {
  DivisionByTropicalZero,
  InvalidPolynomial,
  UnsortedRoots,
  AssumptionViolated,
  DegreeZero,
  CapExceeded,
  TropicalZeroResultant,
  PreconditionViolated,
  ZeroPolynomial,
  BothZero,
  DegenerateDraw,
  ParseError,
  LeadingZeroError,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& expected)
      : Error(kind, "at byte " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace tropres
