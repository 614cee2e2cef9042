#pragma once

#include <stdexcept>
#include <string>

namespace chevkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHEVKIT_DECLARE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

CHEVKIT_DECLARE_ERROR(NonSimplyLaced);
CHEVKIT_DECLARE_ERROR(NonFinite);
CHEVKIT_DECLARE_ERROR(UnknownLetter);
CHEVKIT_DECLARE_ERROR(DomainNotStable);
CHEVKIT_DECLARE_ERROR(OrderBound);
CHEVKIT_DECLARE_ERROR(RingMismatch);
CHEVKIT_DECLARE_ERROR(NotAPerfectSquare);
CHEVKIT_DECLARE_ERROR(MissingVariable);
CHEVKIT_DECLARE_ERROR(ParseError);
CHEVKIT_DECLARE_ERROR(ContextMismatch);
CHEVKIT_DECLARE_ERROR(NotInParabolic);
CHEVKIT_DECLARE_ERROR(SolverIncomplete);
CHEVKIT_DECLARE_ERROR(UnsupportedSupport);
CHEVKIT_DECLARE_ERROR(SupportNotCentralInContext);
CHEVKIT_DECLARE_ERROR(SearchSpaceTooLarge);

#undef CHEVKIT_DECLARE_ERROR

/// Raised when a root table disagrees with the generated root system.
class LabelMismatch : public Error {
 public:
  LabelMismatch(int label, const std::string& why)
      : Error("label " + std::to_string(label) + ": " + why), label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

}  // namespace chevkit
