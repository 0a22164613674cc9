#ifndef KNITFRAME_SAMPLING_HPP
#define KNITFRAME_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "knitframe/covariance.hpp"
#include "knitframe/dual_synthesis.hpp"
#include "knitframe/random.hpp"
#include "knitframe/representation.hpp"

namespace knitframe {

struct SchemeOptions {
  std::optional<double> rank_tol;
  double recon_tol = 1e-9;
  /// Condition numbers of R above this are reported as ill-conditioned and
  /// exempt from the residual checks.
  double ill_conditioned_above = 1e8;
  /// Free parameter U of the left-inverse family; R† when absent.
  std::optional<CMatrix> free_parameter;
};

struct FrameBounds {
  double lower = 0;  // A
  double upper = 0;  // B
  bool is_frame = false;
};

/// Generalized sampling of A_a at the indexing subgroup with κ channels.
///
/// Frame bounds are squared extreme singular values of R, i.e. they bound
/// Σ|ℒ_k f|² against the coefficient norm ‖α‖² in ℓ²(G), not ‖f‖ in ℋ.
struct SamplingScheme {
  SamplingSubspace subspace;
  std::vector<CVector> channels;
  CrossCovarianceMatrix r;
  LeftInverseFamily family;
  SchemeOptions options;

  bool reconstructing = false;
  bool ill_conditioned = false;
  double condition_number = 0;
  FrameBounds bounds;

  /// Present iff rank R = 𝔤.
  std::optional<GCompatibleLeftInverse> m_s;
  /// c_k (ByN) or d_k (ByH); empty unless reconstructing.
  std::vector<CVector> recon_vectors;
  /// The same construction carried out from R† without verification; for a
  /// rank-deficient R this is the expansion that fails.
  std::optional<GCompatibleLeftInverse> attempted_m_s;
  std::vector<CVector> attempted_vectors;

  Indexing indexing() const { return r.indexing(); }
  const CosetLayout& layout() const { return r.layout; }
  Index kappa() const { return r.kappa; }
  Index order() const { return r.layout.order(); }
  Index rank() const { return family.spectrum.rank; }
  const UnitaryRepresentation& rep() const { return subspace.rep; }
};

/// ℒ_k f(p_n) in row k, column n.
struct SampleSet {
  CMatrix values;

  /// Stacked k-major, matching the rows of R.
  CVector flatten() const;
};

/// Throws DependentOrbit if the orbit is dependent and SubgroupNotAbelian.
SamplingScheme build_scheme(const SamplingSubspace& subspace, const std::vector<CVector>& channels,
                            const KnitFactorization& f, Indexing indexing, SchemeOptions options = {});

SampleSet take_samples(const SamplingScheme& scheme, const CVector& f);

/// Σ_{k,n} ℒ_k f(p_n) U(p_n) c_k. Throws NotReconstructing.
CVector reconstruct(const SamplingScheme& scheme, const SampleSet& samples);

/// Σ_{k,n} ℒ_k f(p_n) s̃_{k,n}, returned in the canonical element order.
CVector reconstruct_coefficients(const SamplingScheme& scheme, const SampleSet& samples);

FrameBounds verify_frame(const SamplingScheme& scheme);

/// Maximum |ℒ_k c_{k'}(p_n) − δ_{k,k'}δ_{n,1}|. Throws NotSquareCase unless
/// κ = |q| and R is invertible.
double interpolation_deviation(const SamplingScheme& scheme);
bool check_interpolation(const SamplingScheme& scheme, double tol = 1e-9);

/// max over the basis U(g)a of ‖f − Σ ℒ_k f(p_n) U(p_n) c_k‖ / ‖f‖, using the
/// attempted vectors when the scheme is not reconstructing.
double dual_expansion_check(const SamplingScheme& scheme);

/// The four equivalent conditions, each established on its own route.
struct ConditionReport {
  bool full_rank = false;  // (1) rank R = 𝔤
  bool seed_exists = false;  // (2) S R = (I | 0) solvable
  double seed_residual = 0;
  bool structured_expansion = false;  // (3) f = Σ ℒ_k f(p_n) U(p_n) c_k and the system spans A_a
  double roundtrip_residual = 0;
  Index synthesized_rank = 0;
  bool frame_expansion = false;  // (4) some frame C_{k,n} reproduces f
  double frame_residual = 0;

  bool agree() const {
    return full_rank == seed_exists && seed_exists == structured_expansion &&
           structured_expansion == frame_expansion;
  }
};

ConditionReport check_equivalence(const SamplingScheme& scheme, int trials, std::uint64_t seed);

/// Random element Σ α(g)U(g)a of A_a, with its coefficients.
std::pair<CVector, CVector> random_subspace_element(const SamplingSubspace& subspace, Rng& rng);

}  // namespace knitframe

#endif  // KNITFRAME_SAMPLING_HPP
