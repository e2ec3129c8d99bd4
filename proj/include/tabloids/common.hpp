#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tabloids {

// Exact counts (tabloid numbers, marked-tabloid numbers, character
// multiplicities). 64 bits covers every shape up to 20 boxes.
using Count = std::uint64_t;

// Full enumeration is only attempted up to this many boxes unless the
// caller raises the cap explicitly.
inline constexpr int kDefaultEnumerationCap = 12;

// The monomial-matrix trace walks one representative per orbit and is the
// slow path; it gets a tighter default.
inline constexpr int kDefaultOracleCap = 10;

enum class Errc {
  not_weakly_decreasing,
  non_positive_part,
  not_l_partition,
  length_mismatch,
  empty_component,
  order_mismatch,
  size_mismatch,
  cap_exceeded,
  wrong_label_count,
  not_rectangle_with_spacing,
  row_not_weakly_increasing,
  gamma_mismatch,
  invalid_marked,
  not_eigen_tabloid,
  parse_error,
  validation_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_weakly_decreasing:      return "NotWeaklyDecreasing";
    case Errc::non_positive_part:          return "NonPositivePart";
    case Errc::not_l_partition:            return "NotLPartition";
    case Errc::length_mismatch:            return "LengthMismatch";
    case Errc::empty_component:            return "EmptyComponent";
    case Errc::order_mismatch:             return "OrderMismatch";
    case Errc::size_mismatch:              return "SizeMismatch";
    case Errc::cap_exceeded:               return "CapExceeded";
    case Errc::wrong_label_count:          return "WrongLabelCount";
    case Errc::not_rectangle_with_spacing: return "NotRectangleWithSpacing";
    case Errc::row_not_weakly_increasing:  return "RowNotWeaklyIncreasing";
    case Errc::gamma_mismatch:             return "GammaMismatch";
    case Errc::invalid_marked:             return "InvalidMarked";
    case Errc::not_eigen_tabloid:          return "NotEigenTabloid";
    case Errc::parse_error:                return "ParseError";
    case Errc::validation_error:           return "ValidationError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tabloids
