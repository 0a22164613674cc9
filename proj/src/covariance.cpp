#include "knitframe/covariance.hpp"

namespace knitframe {

CrossCovariance cross_covariance(const UnitaryRepresentation& rep, const CVector& a, const CVector& b) {
  if (a.size() != rep.dim() || b.size() != rep.dim())
    throw Error(ErrorKind::ShapeMismatch, "vectors must have the representation dimension");
  CrossCovariance r{CVector(rep.group().order())};
  for (int g = 0; g < rep.group().order(); ++g) r.values(g) = inner(rep.matrix(g) * a, b);
  return r;
}

CVector sample_vector(const UnitaryRepresentation& rep, const CVector& a, const CVector& b,
                      Element index_element) {
  const FiniteGroup& g = rep.group();
  const CrossCovariance r = cross_covariance(rep, a, b);
  const Element inv = g.inv(index_element);
  CVector out(g.order());
  for (int x = 0; x < g.order(); ++x) out(x) = std::conj(r(g.mul(inv, x)));
  return out;
}

CosetLayout::CosetLayout(const KnitFactorization& f, Indexing indexing)
    : group_(f.group_ptr()), indexing_(indexing) {
  indexing_elements_ = indexing == Indexing::ByN ? f.n_elements() : f.h_elements();
  complement_elements_ = indexing == Indexing::ByN ? f.h_elements() : f.n_elements();
  const FiniteGroup& g = *group_;

  column_of_.assign(g.order(), -1);
  indexing_pos_.assign(g.order(), -1);
  for (std::size_t m = 0; m < indexing_elements_.size(); ++m)
    indexing_pos_[indexing_elements_[m]] = static_cast<int>(m);

  column_order_.reserve(g.order());
  for (Element p : indexing_elements_)
    for (Element q : complement_elements_) {
      const Element x = g.mul(g.inv(p), q);
      if (column_of_[x] >= 0)
        throw Error(ErrorKind::IndexResolutionFailure,
                    "cosets overlap at element " + std::to_string(x), {x});
      column_of_[x] = static_cast<Index>(column_order_.size());
      column_order_.push_back(x);
    }
  if (static_cast<int>(column_order_.size()) != g.order())
    throw Error(ErrorKind::IndexResolutionFailure, "cosets do not cover the group");
  cyclic_ = is_generator_ordered(g, indexing_elements_);
}

CVector CosetLayout::to_columns(const Eigen::Ref<const CVector>& alpha) const {
  CVector v(order());
  for (Index c = 0; c < order(); ++c) v(c) = alpha(column_order_[c]);
  return v;
}

CVector CosetLayout::from_columns(const Eigen::Ref<const CVector>& v) const {
  CVector alpha(order());
  for (Index c = 0; c < order(); ++c) alpha(column_order_[c]) = v(c);
  return alpha;
}

CVector CosetLayout::translate(Element s, const Eigen::Ref<const CVector>& v) const {
  CVector out(order());
  for (Index c = 0; c < order(); ++c) out(column_of_[group_->mul(s, column_order_[c])]) = v(c);
  return out;
}

bool check_block_symmetry(const CrossCovarianceMatrix& r, double tol) {
  const Index p = r.layout.block_rows(), q = r.layout.block_shift();
  for (const CMatrix& b : r.blocks)
    for (Index l = 0; l < p; ++l)
      for (Index c = l + 1; c < p; ++c)
        if (max_abs_diff(b.block(l, c * q, 1, q), b.block(c, l * q, 1, q)) > tol) return false;
  return true;
}

CrossCovarianceMatrix build_cross_cov_matrix(const UnitaryRepresentation& rep, const CVector& a,
                                             const std::vector<CVector>& channels,
                                             const KnitFactorization& f, Indexing indexing) {
  CosetLayout layout(f, indexing);
  const FiniteGroup& g = rep.group();
  if (!g.is_abelian_on(layout.indexing_elements()))
    throw Error(ErrorKind::SubgroupNotAbelian,
                std::string(indexing == Indexing::ByN ? "N" : "H") + " is not Abelian");

  const Index p = layout.block_rows();
  const Index kappa = static_cast<Index>(channels.size());
  CrossCovarianceMatrix out{layout, kappa, {}, CMatrix(kappa * p, g.order()),
                            structure_tolerance(rep), false};

  for (Index k = 0; k < kappa; ++k) {
    const CrossCovariance r = cross_covariance(rep, a, channels[k]);
    CMatrix block(p, g.order());
    for (Index l = 0; l < p; ++l) {
      const Element row_inv = g.inv(layout.indexing_elements()[l]);
      for (Index c = 0; c < g.order(); ++c) block(l, c) = r(g.mul(row_inv, layout.column_order()[c]));
    }
    out.stacked.middleRows(k * p, p) = block;
    out.blocks.push_back(std::move(block));
  }

  if (!check_block_symmetry(out, out.structure_tol))
    throw Error(ErrorKind::StructureViolation, "blocks are not symmetric in (l, r)");
  if (layout.cyclic()) {
    if (!check_h_circulant(out.stacked, p, layout.block_shift(), kappa, out.structure_tol))
      throw Error(ErrorKind::StructureViolation, "blocks lack the shift structure");
    out.shift_structure_checked = true;
  }
  return out;
}

}  // namespace knitframe
