#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace walsh {

enum class Errc {
  InvalidInput,
  UnsupportedDiscriminant,
  NoRepresentation,
  NotIndexTwo,
  BadL,
  NotAResidue,
  DomainMismatch,
  Unsupported,
  InvalidExponent,
  CannotCertifyPrimitive,
  ZeroInput,
  InternalInconsistency,
  UnresolvedConvention,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace walsh
