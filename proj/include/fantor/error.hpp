#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fantor {

enum class Errc {
  CompositionNonzero,
  DimensionMismatch,
  NonPrimitiveRay,
  DependentGenerators,
  NotRegular,
  BadIntersection,
  DuplicateRay,
  ConeNotInFan,
  FaceNotInComplex,
  RankMismatch,
  NotOpen,
  InvalidSheaf,
  HypothesesNotMet,
  DimensionTooSmall,
  ParseError,
  IndexOutOfRange,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::CompositionNonzero: return "CompositionNonzero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonPrimitiveRay: return "NonPrimitiveRay";
    case Errc::DependentGenerators: return "DependentGenerators";
    case Errc::NotRegular: return "NotRegular";
    case Errc::BadIntersection: return "BadIntersection";
    case Errc::DuplicateRay: return "DuplicateRay";
    case Errc::ConeNotInFan: return "ConeNotInFan";
    case Errc::FaceNotInComplex: return "FaceNotInComplex";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotOpen: return "NotOpen";
    case Errc::InvalidSheaf: return "InvalidSheaf";
    case Errc::HypothesesNotMet: return "HypothesesNotMet";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::ParseError: return "ParseError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above and a
/// message naming the offending datum.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fantor
