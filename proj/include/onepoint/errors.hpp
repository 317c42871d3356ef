#pragma once

#include <stdexcept>
#include <string>

namespace onepoint {

enum class Errc {
  UnsupportedField,
  DivZero,
  FieldMismatch,
  NotHomogeneous,
  ParseError,
  SingularMap,
  ZeroInput,
  SingularPoint,
  NotOnCurve,
  NotSingular,
  LineComponent,
  InconsistentKnownPoints,
  NotSmoothPoint,
  NotSmoothCurve,
  JUnavailable,
  BadParam,
  NotAPencilOfCurves,
  GenericSingular,
  ClassificationContradiction,
  NotNineTorsion,
  NotType9,
  NotTangentialTriangle,
  NormalizationFailed,
  RootNotInField,
  BadLambda,
  UnknownName,
  DegenerateFamilyMember,
  TranscriptionMismatch,
  NonUniqueInfinitelyNear,
  UnknownCurve,
  UnresolvedParameter,
  InconsistentInput,
  CommonComponent,
  PreconditionFailed,
  Internal,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace onepoint
