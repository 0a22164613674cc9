#include "knitframe/types.hpp"

namespace knitframe {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::KnitAxiomViolation: return "KnitAxiomViolation";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NontrivialIntersection: return "NontrivialIntersection";
    case ErrorKind::FactorizationNotUnique: return "FactorizationNotUnique";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::DependentOrbit: return "DependentOrbit";
    case ErrorKind::NotInSubspace: return "NotInSubspace";
    case ErrorKind::SubgroupNotAbelian: return "SubgroupNotAbelian";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotLeftInverse: return "NotLeftInverse";
    case ErrorKind::IndexResolutionFailure: return "IndexResolutionFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::NotReconstructing: return "NotReconstructing";
    case ErrorKind::NotSquareCase: return "NotSquareCase";
    case ErrorKind::ConfigParse: return "ConfigParse";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

}  // namespace knitframe
