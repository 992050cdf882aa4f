#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

/// Stable error codes. The CLI reports these by name, so the spelling of
/// `errc_name` is part of the external interface.
enum class Errc {
  NotPrime,
  TooLarge,
  DivisionByZero,
  FieldMismatch,
  CharDividesM,
  DuplicateRoot,
  MultiplicityOutOfRange,
  NoTotallyRamifiedPlace,
  PolynomialNotSplit,
  PoleAtPlace,
  UnsupportedPlaceStructure,
  InvalidPlace,
  IndexOutOfRange,
  QTupleTooSmallOrTooLarge,
  AlphaOutOfRange,
  NotSeparable,
  GcdNotOne,
  Alpha0OutOfRange,
  LambdaNotCongruentOne,
  UnsupportedSupport,
  ShapeMismatch,
  SupportOverlap,
  CertificateInvalid,
  SRangeViolation,
  ENotCertified,
  ConditionViolation,
  NeedTwoFibers,
  ParseError,
  InvalidArgument,
  InternalInconsistency,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {});

  Errc code() const noexcept { return code_; }
  /// Optional sub-code, e.g. "ii" for ConditionViolation.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace kummer
