#include "knitframe/representation.hpp"

#include <algorithm>

#include <Eigen/QR>

namespace knitframe {

namespace {

bool is_zero_one(const CMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (z.imag() != 0.0 || (z.real() != 0.0 && z.real() != 1.0)) return false;
    }
  return true;
}

}  // namespace

UnitaryRepresentation validate_representation(GroupPtr group, std::vector<CMatrix> matrices,
                                              double tol) {
  const FiniteGroup& g = *group;
  if (static_cast<int>(matrices.size()) != g.order())
    throw Error(ErrorKind::ShapeMismatch, "expected one matrix per group element");
  const Index d = matrices.empty() ? 0 : matrices[0].rows();
  if (d == 0) throw Error(ErrorKind::ShapeMismatch, "representation dimension must be positive");
  for (int x = 0; x < g.order(); ++x)
    if (matrices[x].rows() != d || matrices[x].cols() != d)
      throw Error(ErrorKind::ShapeMismatch, "matrix " + std::to_string(x) + " is not d x d", {x});

  const CMatrix id = CMatrix::Identity(d, d);
  if (double dev = max_abs_diff(matrices[g.identity()], id); dev > tol)
    throw Error(ErrorKind::IdentityMismatch, "U(1) deviates from I by " + std::to_string(dev),
                {g.identity()}, dev);

  for (int x = 0; x < g.order(); ++x)
    if (double dev = max_abs_diff(matrices[x].adjoint() * matrices[x], id); dev > tol)
      throw Error(ErrorKind::NotUnitary,
                  "U(" + std::to_string(x) + ") deviates from unitary by " + std::to_string(dev),
                  {x}, dev);

  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (double dev = max_abs_diff(matrices[x] * matrices[y], matrices[g.mul(x, y)]); dev > tol)
        throw Error(ErrorKind::NotHomomorphism,
                    "U(" + std::to_string(x) + ")U(" + std::to_string(y) + ") off by " +
                        std::to_string(dev),
                    {x, y}, dev);

  UnitaryRepresentation rep;
  rep.exact_ = std::all_of(matrices.begin(), matrices.end(), is_zero_one);
  rep.group_ = std::move(group);
  rep.dim_ = d;
  rep.matrices_ = std::move(matrices);
  return rep;
}

UnitaryRepresentation left_regular(GroupPtr group) {
  const int n = group->order();
  std::vector<CMatrix> mats(n, CMatrix::Zero(n, n));
  for (int s = 0; s < n; ++s)
    for (int g = 0; g < n; ++g) mats[s](group->mul(s, g), g) = 1.0;
  return validate_representation(std::move(group), std::move(mats), 0.0);
}

CVector left_translate(const FiniteGroup& group, Element s, const Eigen::Ref<const CVector>& alpha) {
  if (alpha.size() != group.order())
    throw Error(ErrorKind::ShapeMismatch, "coefficient vector has the wrong length");
  CVector out(alpha.size());
  for (int g = 0; g < group.order(); ++g) out(group.mul(s, g)) = alpha(g);
  return out;
}

SamplingSubspace build_subspace(const UnitaryRepresentation& rep, const CVector& a,
                                std::optional<double> rank_tol) {
  if (a.size() != rep.dim())
    throw Error(ErrorKind::ShapeMismatch, "generator length differs from the representation dimension");
  const FiniteGroup& g = rep.group();
  const int n = g.order();

  SamplingSubspace s{rep, a, CMatrix(rep.dim(), n), CMatrix(n, n), {}, false};
  for (int x = 0; x < n; ++x) s.orbit.col(x) = rep.matrix(x) * a;

  CVector autocov(n);
  for (int x = 0; x < n; ++x) autocov(x) = inner(s.orbit.col(x), a);
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < n; ++x) s.gram(t, x) = autocov(g.mul(g.inv(t), x));

  s.spectrum = singular_spectrum(s.gram, rank_tol);
  s.independent = s.spectrum.rank == n;
  return s;
}

Analysis analyze(const SamplingSubspace& subspace, const CVector& f, AnalyzeOptions options) {
  if (f.size() != subspace.orbit.rows())
    throw Error(ErrorKind::ShapeMismatch, "vector length differs from the representation dimension");
  if (!subspace.independent && !options.diagnostics)
    throw Error(ErrorKind::DependentOrbit, "the orbit {U(g)a} is linearly dependent");

  Analysis out;
  out.coefficients = subspace.orbit.completeOrthogonalDecomposition().solve(f);
  out.residual = relative_error(subspace.orbit * out.coefficients, f);
  out.in_subspace = out.residual <= options.tolerance;
  if (!out.in_subspace && !options.diagnostics)
    throw Error(ErrorKind::NotInSubspace,
                "relative residual " + std::to_string(out.residual) + " exceeds tolerance", {},
                out.residual);
  return out;
}

}  // namespace knitframe
