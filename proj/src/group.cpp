#include "knitframe/group.hpp"

#include <algorithm>
#include <numeric>

namespace knitframe {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

bool is_permutation_of_range(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(CayleyTable table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::MalformedTable, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::MalformedTable,
                  "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                      " entries, expected " + std::to_string(n),
                  {a});
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw Error(ErrorKind::MalformedTable,
                    "entry (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range",
                    {a, b});
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::MalformedTable, "label count does not match the order");

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = table[a][b];
      for (int c = 0; c < n; ++c)
        if (table[ab][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAssociative, "triple " + triple(a, b, c), {a, b, c});
    }

  std::vector<Element> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    int count = 0;
    for (int x = 0; x < n; ++x)
      if (table[g][x] == identity) {
        ++count;
        inverse[g] = x;
      }
    if (count != 1 || table[inverse[g]][g] != identity)
      throw Error(ErrorKind::NotInvertible, "element " + std::to_string(g), {g});
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (int g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  }

  FiniteGroup group;
  group.cayley_ = std::move(table);
  group.identity_ = identity;
  group.inverse_ = std::move(inverse);
  group.labels_ = std::move(labels);
  return group;
}

Element FiniteGroup::pow(Element g, int k) const {
  Element base = k < 0 ? inv(g) : g;
  Element out = identity_;
  for (int i = 0; i < std::abs(k); ++i) out = mul(out, base);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (!commutes(a, b)) return false;
  return true;
}

bool FiniteGroup::is_abelian_on(const std::vector<Element>& subset) const {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!commutes(subset[i], subset[j])) return false;
  return true;
}

bool FiniteGroup::is_subgroup(const std::vector<Element>& subset) const {
  if (subset.empty()) return false;
  std::vector<bool> member(order(), false);
  for (Element g : subset) {
    if (g < 0 || g >= order() || member[g]) return false;
    member[g] = true;
  }
  if (!member[identity_]) return false;
  for (Element a : subset)
    for (Element b : subset)
      if (!member[mul(a, b)]) return false;
  return true;
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> out;
  for (int z = 0; z < order(); ++z) {
    bool central = true;
    for (int g = 0; g < order() && central; ++g) central = commutes(z, g);
    if (central) out.push_back(z);
  }
  return out;
}

KnitFactorization::KnitFactorization(GroupPtr group, std::vector<Element> n_elements,
                                     std::vector<Element> h_elements,
                                     std::vector<std::vector<int>> alpha,
                                     std::vector<std::vector<int>> beta)
    : group_(std::move(group)),
      n_elements_(std::move(n_elements)),
      h_elements_(std::move(h_elements)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  const int g = group_->order();
  const int nn = n_order(), nh = h_order();
  if (nn * nh != g || alpha_.size() != static_cast<std::size_t>(nh) ||
      beta_.size() != static_cast<std::size_t>(nn))
    throw Error(ErrorKind::MalformedTable, "factorization tables have inconsistent shapes");

  n_pos_.assign(g, -1);
  h_pos_.assign(g, -1);
  for (int i = 0; i < nn; ++i) n_pos_[n_elements_[i]] = i;
  for (int j = 0; j < nh; ++j) h_pos_[h_elements_[j]] = j;

  factor_.assign(g, {-1, -1});
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nh; ++j) {
      const Element x = group_->mul(n_elements_[i], h_elements_[j]);
      if (factor_[x].first >= 0)
        throw Error(ErrorKind::FactorizationNotUnique,
                    "element " + std::to_string(x) + " has two factorizations", {x});
      factor_[x] = {i, j};
    }
}

bool KnitFactorization::beta_is_identity() const {
  for (int n = 0; n < n_order(); ++n)
    for (int h = 0; h < h_order(); ++h)
      if (beta_[n][h] != h) return false;
  return true;
}

bool KnitFactorization::alpha_is_identity() const {
  for (int h = 0; h < h_order(); ++h)
    for (int n = 0; n < n_order(); ++n)
      if (alpha_[h][n] != n) return false;
  return true;
}

KnitFactorization factor_internal(GroupPtr group, const std::vector<Element>& n_subset,
                                  const std::vector<Element>& h_subset) {
  const FiniteGroup& g = *group;
  auto normalize = [&](const std::vector<Element>& subset, const char* name) {
    if (!g.is_subgroup(subset))
      throw Error(ErrorKind::NotSubgroup, std::string(name) + " is not a subgroup");
    std::vector<Element> out = subset;
    std::stable_partition(out.begin(), out.end(), [&](Element x) { return x == g.identity(); });
    return out;
  };
  std::vector<Element> n_elems = normalize(n_subset, "N");
  std::vector<Element> h_elems = normalize(h_subset, "H");

  for (Element x : n_elems)
    if (x != g.identity() && std::find(h_elems.begin(), h_elems.end(), x) != h_elems.end())
      throw Error(ErrorKind::NontrivialIntersection,
                  "element " + std::to_string(x) + " lies in both subgroups", {x});

  std::vector<bool> covered(g.order(), false);
  for (Element a : n_elems)
    for (Element b : h_elems) covered[g.mul(a, b)] = true;
  for (int x = 0; x < g.order(); ++x)
    if (!covered[x])
      throw Error(ErrorKind::FactorizationNotUnique,
                  "NH misses element " + std::to_string(x), {x});

  const int nn = static_cast<int>(n_elems.size());
  const int nh = static_cast<int>(h_elems.size());
  std::vector<std::pair<int, int>> factor(g.order());
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nh; ++j) factor[g.mul(n_elems[i], h_elems[j])] = {i, j};

  std::vector<std::vector<int>> alpha(nh, std::vector<int>(nn));
  std::vector<std::vector<int>> beta(nn, std::vector<int>(nh));
  for (int j = 0; j < nh; ++j)
    for (int i = 0; i < nn; ++i) {
      const auto [a, b] = factor[g.mul(h_elems[j], n_elems[i])];
      alpha[j][i] = a;
      beta[i][j] = b;
    }

  return KnitFactorization(std::move(group), std::move(n_elems), std::move(h_elems),
                           std::move(alpha), std::move(beta));
}

std::optional<std::vector<int>> find_knit_axiom_violation(
    const FiniteGroup& ng, const FiniteGroup& hg, const std::vector<std::vector<int>>& alpha,
    const std::vector<std::vector<int>>& beta) {
  const int nn = ng.order(), nh = hg.order();
  const Element n1 = ng.identity(), h1 = hg.identity();
  auto a = [&](int h, int n) { return alpha[h][n]; };
  auto b = [&](int n, int h) { return beta[n][h]; };

  // Property 1: α* a homomorphism, β* an anti-homomorphism, into the
  // permutations of N and H.
  for (int h = 0; h < nh; ++h)
    if (!is_permutation_of_range(alpha[h], nn)) return std::vector<int>{1, h};
  for (int n = 0; n < nn; ++n)
    if (!is_permutation_of_range(beta[n], nh)) return std::vector<int>{1, n};
  for (int n = 0; n < nn; ++n)
    if (a(h1, n) != n) return std::vector<int>{1, h1, n};
  for (int h = 0; h < nh; ++h)
    if (b(n1, h) != h) return std::vector<int>{1, n1, h};
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      for (int n = 0; n < nn; ++n)
        if (a(hg.mul(x, y), n) != a(x, a(y, n))) return std::vector<int>{1, x, y, n};
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y)
      for (int h = 0; h < nh; ++h)
        if (b(ng.mul(x, y), h) != b(y, b(x, h))) return std::vector<int>{1, x, y, h};

  // Property 2: α_h(n₁n₂) = α_h(n₁)·α_{β_{n₁}(h)}(n₂).
  for (int h = 0; h < nh; ++h)
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (a(h, ng.mul(x, y)) != ng.mul(a(h, x), a(b(x, h), y)))
          return std::vector<int>{2, h, x, y};

  // Property 3: β_n(h₁h₂) = β_{α_{h₂}(n)}(h₁)·β_n(h₂).
  for (int n = 0; n < nn; ++n)
    for (int x = 0; x < nh; ++x)
      for (int y = 0; y < nh; ++y)
        if (b(n, hg.mul(x, y)) != hg.mul(b(a(y, n), x), b(n, y)))
          return std::vector<int>{3, n, x, y};

  return std::nullopt;
}

KnitProduct knit_external(const FiniteGroup& ng, const FiniteGroup& hg,
                          const std::vector<std::vector<int>>& alpha,
                          const std::vector<std::vector<int>>& beta) {
  const int nn = ng.order(), nh = hg.order();
  bool shape_ok = alpha.size() == static_cast<std::size_t>(nh) &&
                  beta.size() == static_cast<std::size_t>(nn);
  for (const auto& row : alpha) shape_ok = shape_ok && row.size() == static_cast<std::size_t>(nn);
  for (const auto& row : beta) shape_ok = shape_ok && row.size() == static_cast<std::size_t>(nh);
  if (!shape_ok)
    throw Error(ErrorKind::MalformedTable, "alpha must be |H|x|N| and beta |N|x|H|");

  if (auto w = find_knit_axiom_violation(ng, hg, alpha, beta)) {
    std::string msg = "property " + std::to_string(w->front()) + " fails at (";
    for (std::size_t i = 1; i < w->size(); ++i)
      msg += (i > 1 ? ", " : "") + std::to_string((*w)[i]);
    throw Error(ErrorKind::KnitAxiomViolation, msg + ")", *w);
  }

  auto index = [nh](int n, int h) { return n * nh + h; };
  const int order = nn * nh;
  CayleyTable table(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (int n1 = 0; n1 < nn; ++n1)
    for (int h1 = 0; h1 < nh; ++h1) {
      labels[index(n1, h1)] = "(" + ng.label(n1) + "," + hg.label(h1) + ")";
      for (int n2 = 0; n2 < nn; ++n2)
        for (int h2 = 0; h2 < nh; ++h2)
          table[index(n1, h1)][index(n2, h2)] =
              index(ng.mul(n1, alpha[h1][n2]), hg.mul(beta[n2][h1], h2));
    }

  std::optional<FiniteGroup> built;
  try {
    built = FiniteGroup::from_cayley_table(std::move(table), std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAGroup, e.what(), e.witness());
  }
  auto group = std::make_shared<const FiniteGroup>(std::move(*built));

  std::vector<Element> n_sub, h_sub;
  for (int n = 0; n < nn; ++n) n_sub.push_back(index(n, hg.identity()));
  for (int h = 0; h < nh; ++h) h_sub.push_back(index(ng.identity(), h));

  bool agrees = true;
  std::vector<std::string> diagnostics;
  for (int n = 0; n < nn; ++n)
    for (int h = 0; h < nh; ++h) {
      const int formula =
          index(alpha[hg.inv(h)][ng.inv(n)], beta[ng.inv(n)][hg.inv(h)]);
      if (formula != group->inv(index(n, h))) {
        agrees = false;
        diagnostics.push_back("inverse formula disagrees with the table at (" +
                              std::to_string(n) + "," + std::to_string(h) + ")");
      }
    }

  return KnitProduct{group, factor_internal(group, n_sub, h_sub), agrees, std::move(diagnostics)};
}

KnitProduct build_dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::MalformedTable, "dihedral order parameter must be >= 1");
  const int order = 2 * n;
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  CayleyTable table(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    const bool xs = x >= n;
    const int a = x % n;
    for (int y = 0; y < order; ++y) {
      const bool ys = y >= n;
      const int b = y % n;
      // r^a s = s r^{-a}
      if (!xs && !ys) table[x][y] = mod(a + b);
      else if (!xs && ys) table[x][y] = n + mod(b - a);
      else if (xs && !ys) table[x][y] = n + mod(a + b);
      else table[x][y] = mod(b - a);
    }
    const std::string rot = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    labels[x] = xs ? "s" + rot : (rot.empty() ? "e" : rot);
  }

  auto group = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_cayley_table(std::move(table), std::move(labels)));
  std::vector<Element> rotations(n);
  std::iota(rotations.begin(), rotations.end(), 0);
  return KnitProduct{group, factor_internal(group, rotations, {0, n}), true, {}};
}

std::vector<Element> coset_decomposition(const KnitFactorization& f, Quotient quotient_by) {
  return quotient_by == Quotient::ByH ? f.n_elements() : f.h_elements();
}

Element coset_representative(const KnitFactorization& f, Quotient quotient_by, Element g) {
  const FiniteGroup& grp = f.group();
  if (quotient_by == Quotient::ByH) return f.n_elements()[f.factor(g).first];
  for (Element tau : f.h_elements())
    if (f.n_position(grp.mul(grp.inv(tau), g)) >= 0) return tau;
  throw Error(ErrorKind::IndexResolutionFailure, "element without a G/N representative", {g});
}

bool is_generator_ordered(const FiniteGroup& g, const std::vector<Element>& elements) {
  const int p = static_cast<int>(elements.size());
  if (p == 0 || elements[0] != g.identity()) return false;
  if (p == 1) return true;
  const Element x = elements[1];
  for (int i = 0; i < p; ++i)
    if (elements[i] != g.pow(x, i)) return false;
  return g.pow(x, p) == g.identity();
}

}  // namespace knitframe
