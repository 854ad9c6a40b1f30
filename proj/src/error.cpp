#include "walsh/error.hpp"

namespace walsh {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::NotIndexTwo: return "NotIndexTwo";
    case Errc::BadL: return "BadL";
    case Errc::NotAResidue: return "NotAResidue";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::InvalidExponent: return "InvalidExponent";
    case Errc::CannotCertifyPrimitive: return "CannotCertifyPrimitive";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::UnresolvedConvention: return "UnresolvedConvention";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace walsh
