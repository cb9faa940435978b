#ifndef EULCAT_ERROR_HPP
#define EULCAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulcat {

enum class ErrorKind {
  // category validation
  NonAssociative,
  BrokenIdentity,
  IncompleteCompositionTable,
  DanglingReference,
  DuplicateId,
  NotAFunctor,
  NotANaturalIso,
  // structural preconditions
  NotScwol,
  NotGroupoid,
  UnknownObject,
  HypothesisNotMet,
  // linear algebra and Euler characteristics
  DimensionMismatch,
  NoWeighting,
  NoEulerCharacteristic,
  // diagrams and spectra
  CoherenceFailure,
  UnknownKind,
  MissingValue,
  InvalidSpectrum,
  // groups and actions
  NotAGroup,
  NotAHomomorphism,
  NotAFunctorAction,
  AxiomIViolation,
  AxiomIIViolation,
  NotAnAction,
  InvalidQuotient,
  InvalidComplex,
  InvalidChoice,
  // input format
  ParseError,
  // a checked mathematical identity failed; indicates a library bug
  InternalError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eulcat

#endif  // EULCAT_ERROR_HPP
