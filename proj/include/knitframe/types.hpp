#ifndef KNITFRAME_TYPES_HPP
#define KNITFRAME_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace knitframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Eigen::Index;

/// Position of a group element in the canonical enumeration of its group.
using Element = int;

using CayleyTable = std::vector<std::vector<Element>>;

enum class ErrorKind {
  MalformedTable,
  NoIdentity,
  NotAssociative,
  NotInvertible,
  NotAGroup,
  KnitAxiomViolation,
  NotSubgroup,
  NontrivialIntersection,
  FactorizationNotUnique,
  NotUnitary,
  NotHomomorphism,
  IdentityMismatch,
  DependentOrbit,
  NotInSubspace,
  SubgroupNotAbelian,
  StructureViolation,
  ShapeMismatch,
  RankDeficient,
  NotLeftInverse,
  IndexResolutionFailure,
  VerificationFailure,
  NotReconstructing,
  NotSquareCase,
  ConfigParse,
  ValidationFailure,
};

const char* to_string(ErrorKind kind);

/// Library error. `witness` carries the offending element indices (or the
/// property id followed by the indices for knit axiom failures), and
/// `deviation` the measured max-norm violation where one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<Element> witness = {}, double deviation = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)),
        deviation_(deviation) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }
  double deviation() const noexcept { return deviation_; }

 private:
  ErrorKind kind_;
  std::vector<Element> witness_;
  double deviation_;
};

/// Which subgroup indexes the samples: N (rows per channel = |N|) or H.
enum class Indexing { ByN, ByH };

inline const char* to_string(Indexing i) { return i == Indexing::ByN ? "N" : "H"; }

}  // namespace knitframe

#endif  // KNITFRAME_TYPES_HPP
