#include "knitframe/dual_synthesis.hpp"

namespace knitframe {

LeftInverseFamily make_left_inverse_family(const CMatrix& r, std::optional<double> rank_tol) {
  LeftInverseFamily family{r, pseudoinverse(r, rank_tol), singular_spectrum(r, rank_tol)};
  return family;
}

CMatrix left_inverse_member(const LeftInverseFamily& family, const CMatrix& u) {
  if (!family.full_column_rank())
    throw Error(ErrorKind::RankDeficient, "rank " + std::to_string(family.spectrum.rank) +
                                              " < " + std::to_string(family.r.cols()));
  if (u.rows() != family.pinv.rows() || u.cols() != family.pinv.cols())
    throw Error(ErrorKind::ShapeMismatch, "free parameter must have the pseudoinverse's shape");
  const Index rows = family.r.rows();
  return family.pinv + u * (CMatrix::Identity(rows, rows) - family.r * family.pinv);
}

SeedRows extract_S(const CMatrix& m, const CrossCovarianceMatrix& r, double tol) {
  const Index q = r.layout.block_shift();
  const Index g = r.layout.order();
  if (m.rows() != g || m.cols() != r.stacked.rows())
    throw Error(ErrorKind::ShapeMismatch, "left inverse has the wrong shape");

  SeedRows seed{m.topRows(q), r.layout.block_rows()};
  CMatrix target = CMatrix::Zero(q, g);
  target.leftCols(q).setIdentity();
  if (double dev = max_abs_diff(seed.s * r.stacked, target); dev > tol)
    throw Error(ErrorKind::NotLeftInverse, "S R deviates from (I | 0) by " + std::to_string(dev), {},
                dev);
  return seed;
}

GCompatibleLeftInverse build_M_S(const SeedRows& seed, const CrossCovarianceMatrix& r,
                                 BuildOptions options) {
  const CosetLayout& layout = r.layout;
  const FiniteGroup& g = layout.group();
  const Index p = layout.block_rows(), q = layout.block_shift();
  const Index kappa = r.kappa;
  if (seed.s.rows() != q || seed.s.cols() != kappa * p)
    throw Error(ErrorKind::ShapeMismatch, "S must be |q| x kappa|p|");

  GCompatibleLeftInverse out{layout, kappa, seed.s, CMatrix(layout.order(), kappa * p), options.source};
  for (Index i = 0; i < p; ++i) {
    const Element pi = layout.indexing_elements()[i];
    for (Index n = 0; n < p; ++n) {
      // p_m⁻¹ = p_n⁻¹ p_i⁻¹
      const Element target = g.inv(g.mul(g.inv(layout.indexing_elements()[n]), g.inv(pi)));
      const int m = layout.indexing_position(target);
      if (m < 0)
        throw Error(ErrorKind::IndexResolutionFailure, "no subgroup element for the product",
                    {layout.indexing_elements()[n], pi});
      for (Index k = 0; k < kappa; ++k)
        out.m_s.block(i * q, k * p + n, q, 1) = seed.s.col(k * p + m);
    }
  }

  if (options.verify) {
    const Index dim = layout.order();
    if (double dev = max_abs_diff(out.m_s * r.stacked, CMatrix::Identity(dim, dim)); dev > options.tol)
      throw Error(ErrorKind::VerificationFailure,
                  "M_S R deviates from the identity by " + std::to_string(dev), {}, dev);
    if (!verify_shift_structure(out.m_s, layout, kappa, 0.0))
      throw Error(ErrorKind::VerificationFailure, "M_S columns are not left translates");
  }
  return out;
}

double shift_structure_deviation(const CMatrix& m_s, const CosetLayout& layout, Index kappa) {
  const Index p = layout.block_rows();
  if (m_s.rows() != layout.order() || m_s.cols() != kappa * p)
    throw Error(ErrorKind::ShapeMismatch, "matrix does not match the layout");
  double worst = 0;
  for (Index k = 0; k < kappa; ++k) {
    const CVector seed = m_s.col(k * p);
    for (Index n = 0; n < p; ++n)
      worst = std::max(worst,
                       max_abs_diff(m_s.col(k * p + n), layout.translate(layout.indexing_elements()[n], seed)));
  }
  return worst;
}

bool verify_shift_structure(const CMatrix& m_s, const CosetLayout& layout, Index kappa, double tol) {
  return shift_structure_deviation(m_s, layout, kappa) <= tol;
}

}  // namespace knitframe
