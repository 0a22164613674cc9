#ifndef KNITFRAME_COVARIANCE_HPP
#define KNITFRAME_COVARIANCE_HPP

#include <vector>

#include "knitframe/group.hpp"
#include "knitframe/linalg.hpp"
#include "knitframe/representation.hpp"
#include "knitframe/types.hpp"

namespace knitframe {

/// r_{a,b}(g) = ⟨U(g)a, b⟩ for every element g.
struct CrossCovariance {
  CVector values;

  Complex operator()(Element g) const { return values(g); }
};

CrossCovariance cross_covariance(const UnitaryRepresentation& rep, const CVector& a, const CVector& b);

/// g_{k,ν}: entry g is conj(r_{a,b}(ν⁻¹g)), so that ⟨α, g_{k,ν}⟩ = ⟨f, U(ν)b⟩
/// for f = Σα(g)U(g)a.
CVector sample_vector(const UnitaryRepresentation& rep, const CVector& a, const CVector& b,
                      Element index_element);

/// How G is enumerated along the columns of a cross-covariance matrix.
///
/// With p the indexing subgroup's elements (ν for ByN, τ for ByH) and q the
/// complementary ones, column c = r·|q| + j holds the element p_r⁻¹·q_j, so
/// the columns walk the left cosets p_r⁻¹Q in order.
class CosetLayout {
 public:
  CosetLayout(const KnitFactorization& f, Indexing indexing);

  Indexing indexing() const { return indexing_; }
  const FiniteGroup& group() const { return *group_; }
  const std::vector<Element>& indexing_elements() const { return indexing_elements_; }
  const std::vector<Element>& complement_elements() const { return complement_elements_; }
  Index block_rows() const { return static_cast<Index>(indexing_elements_.size()); }
  Index block_shift() const { return static_cast<Index>(complement_elements_.size()); }
  Index order() const { return static_cast<Index>(column_order_.size()); }

  const std::vector<Element>& column_order() const { return column_order_; }
  Index column_of(Element g) const { return column_of_[g]; }
  /// Position m with p_m = x, or -1 when x is not in the indexing subgroup.
  int indexing_position(Element x) const { return indexing_pos_[x]; }

  /// Canonical element order -> column order, and back.
  CVector to_columns(const Eigen::Ref<const CVector>& alpha) const;
  CVector from_columns(const Eigen::Ref<const CVector>& v) const;

  /// L_s on a vector stored in column order.
  CVector translate(Element s, const Eigen::Ref<const CVector>& v) const;

  /// Whether the indexing subgroup is stored as powers of a generator, the
  /// condition under which the blocks are shift-structured.
  bool cyclic() const { return cyclic_; }

 private:
  GroupPtr group_;
  Indexing indexing_;
  std::vector<Element> indexing_elements_;
  std::vector<Element> complement_elements_;
  std::vector<Element> column_order_;
  std::vector<Index> column_of_;
  std::vector<int> indexing_pos_;
  bool cyclic_ = false;
};

/// The stacked κ|p|×𝔤 matrix ℝ_{a,b}; block k row l column c holds
/// r_{a,b_k}(p_l⁻¹ · column_order[c]).
struct CrossCovarianceMatrix {
  CosetLayout layout;
  Index kappa = 0;
  std::vector<CMatrix> blocks;
  CMatrix stacked;
  /// Tolerance the structure checks ran at.
  double structure_tol = 0;
  /// The shift-structure check applies (cyclic indexing subgroup) and passed.
  bool shift_structure_checked = false;

  Indexing indexing() const { return layout.indexing(); }
};

/// Assembles the blocks and verifies block symmetry and, for a cyclic
/// indexing subgroup, the shift structure. Throws SubgroupNotAbelian if the
/// indexing subgroup is not Abelian and StructureViolation if a check fails.
CrossCovarianceMatrix build_cross_cov_matrix(const UnitaryRepresentation& rep, const CVector& a,
                                             const std::vector<CVector>& channels,
                                             const KnitFactorization& f, Indexing indexing);

/// Shift structure of a κ·rows × cols matrix split into κ row blocks: each
/// row is the previous row of its block moved `shift` places to the left,
/// wrapping around, i.e. C = ℙ C P^shift with P the 1-circulant shift of
/// order cols and ℙ = diag(P_rows, …, P_rows).
///
/// Throws ShapeMismatch unless C has rows·κ rows and cols divisible by shift.
template <typename Derived>
bool check_h_circulant(const Eigen::MatrixBase<Derived>& c, Index rows, Index shift, Index kappa,
                       double tol) {
  using Scalar = typename Derived::Scalar;
  using Plain = PlainMatrixOf<Derived>;
  if (c.rows() != rows * kappa || shift <= 0 || rows <= 0 || c.cols() % shift != 0 ||
      (kappa > 0 && c.cols() != rows * shift))
    throw Error(ErrorKind::ShapeMismatch, "matrix does not match the block layout");
  if (c.size() == 0) return true;

  Plain block_shift = Plain::Zero(c.rows(), c.rows());
  const Plain p = cyclic_shift<Scalar>(rows);
  for (Index k = 0; k < kappa; ++k) block_shift.block(k * rows, k * rows, rows, rows) = p;

  Plain col_shift = Plain::Identity(c.cols(), c.cols());
  const Plain p_cols = cyclic_shift<Scalar>(c.cols());
  for (Index i = 0; i < shift; ++i) col_shift = col_shift * p_cols;

  return max_abs_diff(block_shift * c * col_shift, c) <= tol;
}

/// Block (l, r) equals block (r, l) within each channel, where blocks are the
/// |q|-wide column groups of each row.
bool check_block_symmetry(const CrossCovarianceMatrix& r, double tol);

/// Default structure tolerance for a representation.
inline double structure_tolerance(const UnitaryRepresentation& rep) {
  return rep.exact() ? 1e-12 : 1e-9;
}

}  // namespace knitframe

#endif  // KNITFRAME_COVARIANCE_HPP
