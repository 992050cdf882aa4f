#include "kummer/error.hpp"

namespace kummer {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::CharDividesM: return "CharDividesM";
    case Errc::DuplicateRoot: return "DuplicateRoot";
    case Errc::MultiplicityOutOfRange: return "MultiplicityOutOfRange";
    case Errc::NoTotallyRamifiedPlace: return "NoTotallyRamifiedPlace";
    case Errc::PolynomialNotSplit: return "PolynomialNotSplit";
    case Errc::PoleAtPlace: return "PoleAtPlace";
    case Errc::UnsupportedPlaceStructure: return "UnsupportedPlaceStructure";
    case Errc::InvalidPlace: return "InvalidPlace";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::QTupleTooSmallOrTooLarge: return "QTupleTooSmallOrTooLarge";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::Alpha0OutOfRange: return "Alpha0OutOfRange";
    case Errc::LambdaNotCongruentOne: return "LambdaNotCongruentOne";
    case Errc::UnsupportedSupport: return "UnsupportedSupport";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SupportOverlap: return "SupportOverlap";
    case Errc::CertificateInvalid: return "CertificateInvalid";
    case Errc::SRangeViolation: return "SRangeViolation";
    case Errc::ENotCertified: return "ENotCertified";
    case Errc::ConditionViolation: return "ConditionViolation";
    case Errc::NeedTwoFibers: return "NeedTwoFibers";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace kummer
