#include "knitframe/sampling.hpp"

#include <cmath>
#include <limits>

#include <Eigen/QR>

namespace knitframe {

namespace {

std::vector<CVector> synthesis_vectors(const SamplingSubspace& subspace,
                                       const GCompatibleLeftInverse& m_s) {
  std::vector<CVector> out;
  for (Index k = 0; k < m_s.kappa; ++k)
    out.push_back(synthesize(subspace, m_s.layout.from_columns(m_s.synthesis_column(k))));
  return out;
}

/// Σ_{k,n} samples(k,n) U(p_n) vectors[k].
CVector structured_expansion(const SamplingScheme& scheme, const SampleSet& samples,
                             const std::vector<CVector>& vectors) {
  const auto& idx = scheme.layout().indexing_elements();
  CVector f = CVector::Zero(scheme.rep().dim());
  for (Index n = 0; n < static_cast<Index>(idx.size()); ++n) {
    CVector acc = CVector::Zero(scheme.rep().dim());
    for (Index k = 0; k < scheme.kappa(); ++k) acc += samples.values(k, n) * vectors[k];
    f += scheme.rep().matrix(idx[n]) * acc;
  }
  return f;
}

}  // namespace

CVector SampleSet::flatten() const {
  CVector out(values.size());
  for (Index k = 0; k < values.rows(); ++k) out.segment(k * values.cols(), values.cols()) = values.row(k).transpose();
  return out;
}

std::pair<CVector, CVector> random_subspace_element(const SamplingSubspace& subspace, Rng& rng) {
  CVector alpha = random_complex_vector(rng, subspace.order());
  return {synthesize(subspace, alpha), alpha};
}

SamplingScheme build_scheme(const SamplingSubspace& subspace, const std::vector<CVector>& channels,
                            const KnitFactorization& f, Indexing indexing, SchemeOptions options) {
  if (!subspace.independent)
    throw Error(ErrorKind::DependentOrbit, "the orbit {U(g)a} is linearly dependent");

  CrossCovarianceMatrix r =
      build_cross_cov_matrix(subspace.rep, subspace.generator, channels, f, indexing);
  LeftInverseFamily family = make_left_inverse_family(r.stacked, options.rank_tol);
  SamplingScheme s{subspace, channels, std::move(r), std::move(family), std::move(options), false, false, 0.0, {}, {}, {}, {}, {}};

  const Index g = s.order();
  const auto& spectrum = s.family.spectrum;
  s.bounds = verify_frame(s);
  const double smallest = spectrum.value(g - 1);
  s.condition_number = smallest > 0 ? spectrum.largest() / smallest
                                    : std::numeric_limits<double>::infinity();
  s.reconstructing = s.family.full_column_rank();
  s.ill_conditioned = s.condition_number > s.options.ill_conditioned_above;

  if (s.kappa() > 0) {
    SeedRows seed{s.family.pinv.topRows(s.layout().block_shift()), s.layout().block_rows()};
    s.attempted_m_s = build_M_S(seed, s.r, {0.0, false, "moore-penrose"});
    s.attempted_vectors = synthesis_vectors(s.subspace, *s.attempted_m_s);
  }

  if (s.reconstructing) {
    const bool supplied = s.options.free_parameter.has_value();
    const CMatrix m = supplied ? left_inverse_member(s.family, *s.options.free_parameter) : s.family.pinv;
    // Attainable accuracy degrades with conditioning.
    const double tol = s.ill_conditioned
                           ? std::numeric_limits<double>::infinity()
                           : std::max(s.options.recon_tol, 10.0 * static_cast<double>(g) *
                                                               s.condition_number *
                                                               std::numeric_limits<double>::epsilon());
    SeedRows seed = extract_S(m, s.r, tol);
    s.m_s = build_M_S(seed, s.r, {tol, true, supplied ? "supplied" : "moore-penrose"});
    s.recon_vectors = synthesis_vectors(s.subspace, *s.m_s);
  }
  return s;
}

SampleSet take_samples(const SamplingScheme& scheme, const CVector& f) {
  if (f.size() != scheme.rep().dim())
    throw Error(ErrorKind::ShapeMismatch, "vector length differs from the representation dimension");
  const auto& idx = scheme.layout().indexing_elements();
  SampleSet out{CMatrix(scheme.kappa(), static_cast<Index>(idx.size()))};
  for (Index n = 0; n < static_cast<Index>(idx.size()); ++n) {
    const CMatrix& u = scheme.rep().matrix(idx[n]);
    for (Index k = 0; k < scheme.kappa(); ++k) out.values(k, n) = inner(f, u * scheme.channels[k]);
  }
  return out;
}

CVector reconstruct(const SamplingScheme& scheme, const SampleSet& samples) {
  if (!scheme.reconstructing)
    throw Error(ErrorKind::NotReconstructing, "rank of R is below the group order");
  if (samples.values.rows() != scheme.kappa() || samples.values.cols() != scheme.layout().block_rows())
    throw Error(ErrorKind::ShapeMismatch, "sample set does not match the scheme");
  return structured_expansion(scheme, samples, scheme.recon_vectors);
}

CVector reconstruct_coefficients(const SamplingScheme& scheme, const SampleSet& samples) {
  if (!scheme.reconstructing)
    throw Error(ErrorKind::NotReconstructing, "rank of R is below the group order");
  const CMatrix& m_s = scheme.m_s->m_s;
  CVector alpha = CVector::Zero(scheme.order());
  for (Index k = 0; k < scheme.kappa(); ++k)
    for (Index n = 0; n < scheme.layout().block_rows(); ++n)
      alpha += samples.values(k, n) * m_s.col(k * scheme.layout().block_rows() + n);
  return scheme.layout().from_columns(alpha);
}

FrameBounds verify_frame(const SamplingScheme& scheme) {
  const auto& spectrum = scheme.family.spectrum;
  const Index g = scheme.order();
  FrameBounds b;
  b.upper = spectrum.largest() * spectrum.largest();
  const double smallest = spectrum.value(g - 1);
  b.lower = smallest * smallest;
  b.is_frame = spectrum.rank == g;
  if (!b.is_frame) b.lower = 0.0;
  return b;
}

double interpolation_deviation(const SamplingScheme& scheme) {
  if (scheme.kappa() != scheme.layout().block_shift() || !scheme.reconstructing)
    throw Error(ErrorKind::NotSquareCase, "interpolation needs kappa = |complement| and invertible R");
  double worst = 0;
  for (Index kp = 0; kp < scheme.kappa(); ++kp) {
    const SampleSet samples = take_samples(scheme, scheme.recon_vectors[kp]);
    CMatrix expected = CMatrix::Zero(samples.values.rows(), samples.values.cols());
    expected(kp, 0) = 1.0;
    worst = std::max(worst, max_abs_diff(samples.values, expected));
  }
  return worst;
}

bool check_interpolation(const SamplingScheme& scheme, double tol) {
  return interpolation_deviation(scheme) <= tol;
}

double dual_expansion_check(const SamplingScheme& scheme) {
  const auto& vectors = scheme.reconstructing ? scheme.recon_vectors : scheme.attempted_vectors;
  double worst = 0;
  for (Index g = 0; g < scheme.order(); ++g) {
    const CVector f = scheme.subspace.orbit.col(g);
    const CVector f_hat = scheme.kappa() > 0
                              ? structured_expansion(scheme, take_samples(scheme, f), vectors)
                              : CVector::Zero(f.size());
    worst = std::max(worst, relative_error(f_hat, f));
  }
  return worst;
}

ConditionReport check_equivalence(const SamplingScheme& scheme, int trials, std::uint64_t seed) {
  ConditionReport rep;
  const Index g = scheme.order();
  const Index p = scheme.layout().block_rows(), q = scheme.layout().block_shift();
  const double tol = scheme.options.recon_tol;

  rep.full_rank = scheme.rank() == g;

  // (2): least squares for S* in R* S* = (I | 0)*, on a complete orthogonal
  // decomposition rather than the SVD behind R†.
  if (scheme.kappa() > 0) {
    CMatrix target = CMatrix::Zero(q, g);
    target.leftCols(q).setIdentity();
    const CMatrix rh = scheme.r.stacked.adjoint();
    const CMatrix s_adj = rh.completeOrthogonalDecomposition().solve(target.adjoint());
    rep.seed_residual = max_abs_diff(rh * s_adj, target.adjoint());
  } else {
    rep.seed_residual = 1.0;
  }
  rep.seed_exists = rep.seed_residual <= tol;

  // (3): U-structured expansion on random elements of A_a.
  const auto& vectors = scheme.reconstructing ? scheme.recon_vectors : scheme.attempted_vectors;
  Rng rng(seed);
  rep.roundtrip_residual = scheme.kappa() > 0 ? 0.0 : 1.0;
  if (scheme.kappa() > 0) {
    for (int t = 0; t < trials; ++t) {
      const auto [f, alpha] = random_subspace_element(scheme.subspace, rng);
      const CVector f_hat = structured_expansion(scheme, take_samples(scheme, f), vectors);
      rep.roundtrip_residual = std::max(rep.roundtrip_residual, relative_error(f_hat, f));
    }
    CMatrix system(scheme.rep().dim(), scheme.kappa() * p);
    for (Index k = 0; k < scheme.kappa(); ++k)
      for (Index n = 0; n < p; ++n)
        system.col(k * p + n) = scheme.rep().matrix(scheme.layout().indexing_elements()[n]) * vectors[k];
    rep.synthesized_rank = numerical_rank(system);
  }
  rep.structured_expansion = rep.roundtrip_residual < tol && rep.synthesized_rank == g;

  // (4): an unstructured frame C_{k,n} = T(m_{k,n}) from the columns of R†,
  // checked on the basis U(g)a.
  rep.frame_residual = scheme.kappa() > 0 ? 0.0 : 1.0;
  if (scheme.kappa() > 0) {
    std::vector<CVector> frame;
    for (Index c = 0; c < scheme.family.pinv.cols(); ++c)
      frame.push_back(synthesize(scheme.subspace, scheme.layout().from_columns(scheme.family.pinv.col(c))));
    for (Index x = 0; x < g; ++x) {
      const CVector f = scheme.subspace.orbit.col(x);
      const CVector samples = take_samples(scheme, f).flatten();
      CVector f_hat = CVector::Zero(f.size());
      for (Index c = 0; c < samples.size(); ++c) f_hat += samples(c) * frame[c];
      rep.frame_residual = std::max(rep.frame_residual, relative_error(f_hat, f));
    }
  }
  rep.frame_expansion = rep.frame_residual < tol;
  return rep;
}

}  // namespace knitframe
