#ifndef KNITFRAME_REPRESENTATION_HPP
#define KNITFRAME_REPRESENTATION_HPP

#include <optional>
#include <vector>

#include "knitframe/group.hpp"
#include "knitframe/linalg.hpp"
#include "knitframe/types.hpp"

namespace knitframe {

inline constexpr double kDefaultRepTolerance = 1e-9;

/// g ↦ U(g), one d×d unitary matrix per element index.
class UnitaryRepresentation {
 public:
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Index dim() const { return dim_; }
  const CMatrix& matrix(Element g) const { return matrices_[g]; }
  const std::vector<CMatrix>& matrices() const { return matrices_; }

  /// Every matrix has entries exactly 0 or 1 (a permutation representation),
  /// so products and translates of it are computed without roundoff.
  bool exact() const { return exact_; }

 private:
  friend UnitaryRepresentation validate_representation(GroupPtr, std::vector<CMatrix>, double);
  UnitaryRepresentation() = default;

  GroupPtr group_;
  Index dim_ = 0;
  std::vector<CMatrix> matrices_;
  bool exact_ = false;
};

/// Checks U(1) = I, U(g)*U(g) = I and U(g)U(g') = U(gg') to max-norm `tol`.
/// Throws ShapeMismatch, IdentityMismatch, NotUnitary(g) or
/// NotHomomorphism(g, g'); the deviation is attached to the error.
UnitaryRepresentation validate_representation(GroupPtr group, std::vector<CMatrix> matrices,
                                              double tol = kDefaultRepTolerance);

/// (L_s α)(g) = α(s⁻¹g); U(s) sends e_g to e_{sg}.
UnitaryRepresentation left_regular(GroupPtr group);

/// Returns L_s α for a coefficient vector in the canonical element order.
CVector left_translate(const FiniteGroup& group, Element s, const Eigen::Ref<const CVector>& alpha);

/// A_a = span{U(g)a} together with its Gram matrix ℝ_a = (r_a(t⁻¹g))_{t,g}.
struct SamplingSubspace {
  UnitaryRepresentation rep;
  CVector generator;
  CMatrix orbit;  // d×𝔤, column g is U(g)a
  CMatrix gram;   // 𝔤×𝔤
  SingularSpectrum<double> spectrum;
  bool independent = false;

  Index order() const { return gram.rows(); }
};

SamplingSubspace build_subspace(const UnitaryRepresentation& rep, const CVector& a,
                                std::optional<double> rank_tol = std::nullopt);

/// The synthesis map α ↦ Σ_g α(g)U(g)a.
template <typename Derived>
CVector synthesize(const SamplingSubspace& subspace, const Eigen::MatrixBase<Derived>& alpha) {
  if (alpha.size() != subspace.orbit.cols())
    throw Error(ErrorKind::ShapeMismatch, "coefficient vector has the wrong length");
  return subspace.orbit * alpha;
}

struct AnalyzeOptions {
  double tolerance = 1e-9;
  /// Report dependence or non-membership in the result instead of throwing.
  bool diagnostics = false;
};

struct Analysis {
  CVector coefficients;
  double residual = 0;  // ‖Σα(g)U(g)a − f‖ / ‖f‖
  bool in_subspace = true;
};

/// Minimum-norm least squares inverse of `synthesize`.
/// Throws DependentOrbit or NotInSubspace unless options.diagnostics is set.
Analysis analyze(const SamplingSubspace& subspace, const CVector& f, AnalyzeOptions options = {});

}  // namespace knitframe

#endif  // KNITFRAME_REPRESENTATION_HPP
