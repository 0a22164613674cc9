#ifndef KNITFRAME_GROUP_HPP
#define KNITFRAME_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knitframe/types.hpp"

namespace knitframe {

/// A finite group stored as its Cayley table. Immutable once built; every
/// constructor validates the group axioms eagerly.
class FiniteGroup {
 public:
  /// Validates `table` (row g, column g' holds the index of gg') and computes
  /// identity and inverses. Labels default to "g0", "g1", ...
  ///
  /// Throws MalformedTable, NoIdentity, NotAssociative or NotInvertible; the
  /// error witness names the first offending element or triple.
  static FiniteGroup from_cayley_table(CayleyTable table, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(cayley_.size()); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return cayley_[a][b]; }
  Element inv(Element g) const { return inverse_[g]; }
  Element pow(Element g, int k) const;
  const CayleyTable& cayley() const { return cayley_; }
  const std::vector<Element>& inverses() const { return inverse_; }
  const std::string& label(Element g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool commutes(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;
  /// Abelian on the given subset (pairwise commuting).
  bool is_abelian_on(const std::vector<Element>& subset) const;
  bool is_subgroup(const std::vector<Element>& subset) const;
  /// Elements commuting with every element of the group.
  std::vector<Element> center() const;

 private:
  FiniteGroup() = default;

  CayleyTable cayley_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Internal knit (Zappa-Szép) factorization G = N ⋈ H: every g is uniquely
/// nh with n ∈ N, h ∈ H, and hn = α_h(n)·β_n(h).
///
/// Both element lists start with the identity. The action tables are stored
/// as positions into those lists: alpha[h][n] is the position of α_h(n) in N,
/// beta[n][h] the position of β_n(h) in H.
class KnitFactorization {
 public:
  KnitFactorization(GroupPtr group, std::vector<Element> n_elements,
                    std::vector<Element> h_elements, std::vector<std::vector<int>> alpha,
                    std::vector<std::vector<int>> beta);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Element>& n_elements() const { return n_elements_; }
  const std::vector<Element>& h_elements() const { return h_elements_; }
  int n_order() const { return static_cast<int>(n_elements_.size()); }
  int h_order() const { return static_cast<int>(h_elements_.size()); }
  const std::vector<std::vector<int>>& alpha() const { return alpha_; }
  const std::vector<std::vector<int>>& beta() const { return beta_; }

  /// Position of g in N (or H), or -1.
  int n_position(Element g) const { return n_pos_[g]; }
  int h_position(Element g) const { return h_pos_[g]; }

  /// Positions (n, h) with g = ν_n τ_h.
  std::pair<int, int> factor(Element g) const { return factor_[g]; }

  bool beta_is_identity() const;
  bool alpha_is_identity() const;

 private:
  GroupPtr group_;
  std::vector<Element> n_elements_;
  std::vector<Element> h_elements_;
  std::vector<std::vector<int>> alpha_;
  std::vector<std::vector<int>> beta_;
  std::vector<int> n_pos_;
  std::vector<int> h_pos_;
  std::vector<std::pair<int, int>> factor_;
};

struct KnitProduct {
  GroupPtr group;
  KnitFactorization factorization;
  /// Whether (n,h)^{-1} = (α_{h^{-1}}(n^{-1}), β_{n^{-1}}(h^{-1})) matched the
  /// Cayley-table inverse for every element.
  bool inverse_formula_agrees = true;
  std::vector<std::string> diagnostics;
};

/// Dihedral group of order 2N. Element i < N is r^i, element N + i is s·r^i.
/// The factorization has N = <r>, H = {e, s} and β ≡ id.
KnitProduct build_dihedral(int n);

/// External knit product on N × H with
/// (n₁,h₁)(n₂,h₂) = (n₁·α_{h₁}(n₂), β_{n₂}(h₁)·h₂).
/// Element (n, h) gets index n·|H| + h. alpha is |H|×|N|, beta is |N|×|H|,
/// both holding element indices of the factor groups.
///
/// Throws KnitAxiomViolation (witness = {property, ...}) or NotAGroup.
KnitProduct knit_external(const FiniteGroup& n_group, const FiniteGroup& h_group,
                          const std::vector<std::vector<int>>& alpha,
                          const std::vector<std::vector<int>>& beta);

/// Checks that N, H are subgroups with N ∩ H = {1}, NH = G with unique
/// factorization, and derives α, β from hn = α_h(n)β_n(h).
KnitFactorization factor_internal(GroupPtr group, const std::vector<Element>& n_subset,
                                  const std::vector<Element>& h_subset);

enum class Quotient { ByH, ByN };

/// Coset representatives: N's elements for G/H, H's elements for G/N.
std::vector<Element> coset_decomposition(const KnitFactorization& f, Quotient quotient_by);

/// Representative of the left coset of g (gH or gN) among the stored ones.
Element coset_representative(const KnitFactorization& f, Quotient quotient_by, Element g);

/// First violated knit property on abstract factor groups, as
/// {property, witness...}; nullopt when properties 1–3 all hold.
std::optional<std::vector<int>> find_knit_axiom_violation(
    const FiniteGroup& n_group, const FiniteGroup& h_group,
    const std::vector<std::vector<int>>& alpha, const std::vector<std::vector<int>>& beta);

/// True iff the list is {e, x, x², …} for x = list[1] and x^|list| = e.
bool is_generator_ordered(const FiniteGroup& g, const std::vector<Element>& elements);

}  // namespace knitframe

#endif  // KNITFRAME_GROUP_HPP
