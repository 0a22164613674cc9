#ifndef KNITFRAME_LINALG_HPP
#define KNITFRAME_LINALG_HPP

// Dense helpers shared by every module. All of them accept arbitrary Eigen
// expressions and are templated on the scalar type.

#include <algorithm>
#include <limits>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace knitframe {

template <typename Derived>
using PlainMatrixOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// ⟨x, y⟩ = Σ x_i conj(y_i): linear in the first slot.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar inner(const Eigen::MatrixBase<DerivedX>& x,
                                const Eigen::MatrixBase<DerivedY>& y) {
  return y.dot(x);
}

/// Largest absolute entrywise difference; 0 for two empty operands.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() == 0) return 0;
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().maxCoeff();
}

/// ‖a − b‖ / ‖b‖, falling back to the absolute error when ‖b‖ vanishes.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar relative_error(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  const Real diff = (a - b).norm();
  const Real ref = b.norm();
  return ref > std::numeric_limits<Real>::min() ? diff / ref : diff;
}

template <typename Real>
struct SingularSpectrum {
  Eigen::Matrix<Real, Eigen::Dynamic, 1> values;  // descending
  Real tolerance = 0;
  Eigen::Index rank = 0;

  Real largest() const { return values.size() ? values(0) : Real(0); }
  /// The k-th largest singular value, or 0 when the matrix has fewer.
  Real value(Eigen::Index k) const { return k < values.size() ? values(k) : Real(0); }
};

/// Rank threshold max(rows, cols) · ε · σ_max.
template <typename Real>
Real default_rank_tolerance(Eigen::Index rows, Eigen::Index cols, Real sigma_max) {
  return static_cast<Real>(std::max(rows, cols)) * std::numeric_limits<Real>::epsilon() *
         sigma_max;
}

template <typename Derived>
SingularSpectrum<typename Derived::RealScalar> singular_spectrum(
    const Eigen::MatrixBase<Derived>& m,
    std::optional<typename Derived::RealScalar> tol = std::nullopt) {
  using Real = typename Derived::RealScalar;
  SingularSpectrum<Real> out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.tolerance = tol.value_or(Real(0));
    return out;
  }
  Eigen::JacobiSVD<PlainMatrixOf<Derived>> svd(m.eval());
  out.values = svd.singularValues();
  out.tolerance = tol.value_or(default_rank_tolerance(m.rows(), m.cols(), out.largest()));
  out.rank = (out.values.array() > out.tolerance).count();
  return out;
}

template <typename Derived>
Eigen::Index numerical_rank(const Eigen::MatrixBase<Derived>& m,
                            std::optional<typename Derived::RealScalar> tol = std::nullopt) {
  return singular_spectrum(m, tol).rank;
}

/// Moore-Penrose pseudoinverse through a thin SVD; singular values at or
/// below the rank tolerance are treated as zero.
template <typename Derived>
PlainMatrixOf<Derived> pseudoinverse(const Eigen::MatrixBase<Derived>& m,
                                     std::optional<typename Derived::RealScalar> tol = std::nullopt) {
  using Real = typename Derived::RealScalar;
  using Plain = PlainMatrixOf<Derived>;
  if (m.rows() == 0 || m.cols() == 0) return Plain::Zero(m.cols(), m.rows());

  Eigen::JacobiSVD<Plain> svd(m.eval(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const Real threshold =
      tol.value_or(default_rank_tolerance(m.rows(), m.cols(), sigma.size() ? sigma(0) : Real(0)));

  Eigen::Matrix<Real, Eigen::Dynamic, 1> inv_sigma(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    inv_sigma(i) = sigma(i) > threshold ? Real(1) / sigma(i) : Real(0);

  return svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().adjoint();
}

/// Max-norm residuals of the four Penrose identities for a candidate X of A.
template <typename Real>
struct PenroseResiduals {
  Real axa = 0;   // AXA − A
  Real xax = 0;   // XAX − X
  Real ax_h = 0;  // (AX)* − AX
  Real xa_h = 0;  // (XA)* − XA

  Real worst() const { return std::max({axa, xax, ax_h, xa_h}); }
};

template <typename DerivedA, typename DerivedX>
PenroseResiduals<typename DerivedA::RealScalar> penrose_residuals(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedX>& x) {
  PenroseResiduals<typename DerivedA::RealScalar> r;
  const auto ax = (a * x).eval();
  const auto xa = (x * a).eval();
  r.axa = max_abs_diff(ax * a, a);
  r.xax = max_abs_diff(xa * x, x);
  r.ax_h = max_abs_diff(ax.adjoint(), ax);
  r.xa_h = max_abs_diff(xa.adjoint(), xa);
  return r;
}

/// The 1-circulant shift of order n: ones at (i, i+1 mod n).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> cyclic_shift(Eigen::Index n) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> p =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(i, (i + 1) % n) = Scalar(1);
  return p;
}

}  // namespace knitframe

#endif  // KNITFRAME_LINALG_HPP
