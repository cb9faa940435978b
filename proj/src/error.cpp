#include "eulcat/error.hpp"

namespace eulcat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BrokenIdentity: return "BrokenIdentity";
    case ErrorKind::IncompleteCompositionTable: return "IncompleteCompositionTable";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotANaturalIso: return "NotANaturalIso";
    case ErrorKind::NotScwol: return "NotScwol";
    case ErrorKind::NotGroupoid: return "NotGroupoid";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoWeighting: return "NoWeighting";
    case ErrorKind::NoEulerCharacteristic: return "NoEulerCharacteristic";
    case ErrorKind::CoherenceFailure: return "CoherenceFailure";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotAFunctorAction: return "NotAFunctorAction";
    case ErrorKind::AxiomIViolation: return "AxiomIViolation";
    case ErrorKind::AxiomIIViolation: return "AxiomIIViolation";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::InvalidQuotient: return "InvalidQuotient";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidChoice: return "InvalidChoice";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Error";
}

}  // namespace eulcat
