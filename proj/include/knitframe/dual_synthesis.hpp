#ifndef KNITFRAME_DUAL_SYNTHESIS_HPP
#define KNITFRAME_DUAL_SYNTHESIS_HPP

#include <optional>
#include <string>

#include "knitframe/covariance.hpp"
#include "knitframe/linalg.hpp"
#include "knitframe/types.hpp"

namespace knitframe {

/// All left inverses 𝕄 = R† + U(I − RR†) of a cross-covariance matrix.
struct LeftInverseFamily {
  CMatrix r;     // κ|p| × 𝔤
  CMatrix pinv;  // 𝔤 × κ|p|
  SingularSpectrum<double> spectrum;

  bool full_column_rank() const { return spectrum.rank == r.cols(); }
};

LeftInverseFamily make_left_inverse_family(const CMatrix& r, std::optional<double> rank_tol = std::nullopt);

/// R† + U(I − RR†). Throws RankDeficient when R lacks full column rank and
/// ShapeMismatch when U is not 𝔤 × κ|p|.
CMatrix left_inverse_member(const LeftInverseFamily& family, const CMatrix& u);

/// The |q| × κ|p| matrix of the first |q| rows of a left inverse, i.e. the
/// rows producing the coefficients on the identity coset.
struct SeedRows {
  CMatrix s;
  Index block_rows = 0;  // |p|; block k is s.middleCols(k·|p|, |p|)

  CMatrix block(Index k) const { return s.middleCols(k * block_rows, block_rows); }
};

/// Takes the first `shift` rows of M and checks S·R = (I | 0) within `tol`.
/// Throws NotLeftInverse otherwise.
SeedRows extract_S(const CMatrix& m, const CrossCovarianceMatrix& r, double tol = 1e-9);

/// A left inverse whose columns are left translates of κ seed columns.
struct GCompatibleLeftInverse {
  CosetLayout layout;
  Index kappa = 0;
  CMatrix s;
  CMatrix m_s;  // 𝔤 × κ|p|, rows in column order of the layout
  /// Where S came from: "moore-penrose" or "supplied".
  std::string source;

  /// s̃_{k,1}: the column for channel k at the identity.
  CVector synthesis_column(Index k) const { return m_s.col(k * layout.block_rows()); }
  CVector column(Index k, Index n) const { return m_s.col(k * layout.block_rows() + n); }
};

struct BuildOptions {
  double tol = 1e-9;
  /// Skip the M_S·R = I check; used to form the attempted expansion of a
  /// rank-deficient scheme.
  bool verify = true;
  std::string source = "supplied";
};

/// Row block i of M_S holds, in column (k, n), the seed column S_k^m where
/// p_m = p_i·p_n. Throws VerificationFailure when M_S·R ≠ I or the shift
/// structure is broken, IndexResolutionFailure if p_i·p_n leaves the subgroup.
GCompatibleLeftInverse build_M_S(const SeedRows& seed, const CrossCovarianceMatrix& r,
                                 BuildOptions options = {});

/// s̃_{k,n} = L_{p_n} s̃_{k,1} for every column, within `tol` (0 = exact).
bool verify_shift_structure(const CMatrix& m_s, const CosetLayout& layout, Index kappa, double tol = 0.0);

/// Largest deviation from the shift structure over all columns.
double shift_structure_deviation(const CMatrix& m_s, const CosetLayout& layout, Index kappa);

}  // namespace knitframe

#endif  // KNITFRAME_DUAL_SYNTHESIS_HPP
