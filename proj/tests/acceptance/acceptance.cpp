// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "generators.hpp"
#include "knitframe/experiment.hpp"
#include "oracles.hpp"

using namespace knitframe;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::vector<CVector> real_channels(Rng& rng, Index d, Index kappa) {
  std::vector<CVector> out;
  for (Index k = 0; k < kappa; ++k) {
    CVector v(d);
    for (Index i = 0; i < d; ++i) v(i) = Complex(2 * uniform01(rng) - 1, 0);
    out.push_back(v);
  }
  return out;
}

Index square_kappa(const KnitFactorization& f, Indexing ix) {
  return ix == Indexing::ByN ? f.h_order() : f.n_order();
}

// A named factorization G = N ⋈ H built from a permutation group.
struct TestGroup {
  std::string name;
  oracle::Table table;
  KnitFactorization f;
};

std::vector<Element> elements_where(const oracle::PermGroup& g, const std::function<bool(const oracle::Perm&)>& keep) {
  std::vector<Element> out;
  for (int x = 0; x < static_cast<int>(g.elements.size()); ++x)
    if (keep(g.elements[x])) out.push_back(x);
  return out;
}

std::vector<Element> powers(const FiniteGroup& g, Element x) {
  std::vector<Element> out{g.identity()};
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) out.push_back(y);
  return out;
}

std::vector<Element> generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<Element> out{g.identity()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(out[i], s);
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
  return out;
}

std::vector<TestGroup> test_groups() {
  std::vector<TestGroup> out;
  const auto add = [&](const std::string& name, const oracle::Table& t,
                       const std::function<std::pair<std::vector<Element>, std::vector<Element>>(const FiniteGroup&)>& pick) {
    const GroupPtr g = share(FiniteGroup::from_cayley_table(t));
    const auto [n, h] = pick(*g);
    out.push_back({name, t, factor_internal(g, n, h)});
  };
  for (int n = 1; n <= 24; ++n) {
    const KnitProduct d = build_dihedral(n);
    out.push_back({"D" + std::to_string(2 * n), d.group->cayley(), d.factorization});
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}, {4, 6}, {6, 8}, {2, 24}}) {
    const oracle::Table t = oracle::direct_product_table(oracle::cyclic_table(a), oracle::cyclic_table(b));
    add("Z" + std::to_string(a) + "xZ" + std::to_string(b), t, [a, b](const FiniteGroup&) {
      std::vector<Element> n, h;
      for (Element x = 0; x < a; ++x) n.push_back(x * b);
      for (Element x = 0; x < b; ++x) h.push_back(x);
      return std::make_pair(n, h);
    });
  }
  const oracle::PermGroup s3 = oracle::symmetric(3), s4 = oracle::symmetric(4), a4 = oracle::alternating(4);
  add("S3=Z2*Z3", s3.table, [&](const FiniteGroup& g) {
    return std::make_pair(powers(g, s3.index_of(oracle::cycle(3, {0, 1}))), powers(g, s3.index_of(oracle::cycle(3, {0, 1, 2}))));
  });
  add("S4=S3*Z4", s4.table, [&](const FiniteGroup& g) {
    return std::make_pair(elements_where(s4, [](const oracle::Perm& p) { return p[3] == 3; }),
                          powers(g, s4.index_of(oracle::cycle(4, {0, 1, 2, 3}))));
  });
  add("S4=Z4*S3", s4.table, [&](const FiniteGroup& g) {
    return std::make_pair(powers(g, s4.index_of(oracle::cycle(4, {0, 1, 2, 3}))),
                          elements_where(s4, [](const oracle::Perm& p) { return p[3] == 3; }));
  });
  const auto v4 = [](const oracle::PermGroup& pg, const FiniteGroup& g) {
    return generated(g, {pg.index_of({1, 0, 3, 2}), pg.index_of({2, 3, 0, 1})});
  };
  {
    const GroupPtr g = share(FiniteGroup::from_cayley_table(s4.table));
    out.push_back({"S4=V4*S3", s4.table,
                   factor_internal(g, v4(s4, *g), elements_where(s4, [](const oracle::Perm& p) { return p[3] == 3; }))});
    out.push_back({"S4=A4*Z2", s4.table,
                   factor_internal(g, elements_where(s4, [&](const oracle::Perm& p) {
                                     return std::find(a4.elements.begin(), a4.elements.end(), p) != a4.elements.end();
                                   }),
                                   powers(*g, s4.index_of(oracle::cycle(4, {0, 1}))))});
    const GroupPtr ga = share(FiniteGroup::from_cayley_table(a4.table));
    out.push_back({"A4=V4*Z3", a4.table, factor_internal(ga, v4(a4, *ga), powers(*ga, a4.index_of(oracle::cycle(4, {0, 1, 2}))))});
  }
  {
    // S4 × Z2 = (S3 × Z2) ⋈ Z4, order 48.
    const oracle::Table t = oracle::direct_product_table(s4.table, oracle::cyclic_table(2));
    const GroupPtr g = share(FiniteGroup::from_cayley_table(t));
    std::vector<Element> n;
    for (Element x : elements_where(s4, [](const oracle::Perm& p) { return p[3] == 3; }))
      for (int z = 0; z < 2; ++z) n.push_back(x * 2 + z);
    std::sort(n.begin(), n.end());
    out.push_back({"S4xZ2=(S3xZ2)*Z4", t, factor_internal(g, n, powers(*g, s4.index_of(oracle::cycle(4, {0, 1, 2, 3})) * 2))});
  }
  return out;
}

struct FactorTables {
  oracle::Table n, h, alpha, beta;
};

FactorTables tables_of(const KnitFactorization& f) {
  const auto& t = f.group().cayley();
  return {oracle::subgroup_table(t, f.n_elements()), oracle::subgroup_table(t, f.h_elements()), f.alpha(), f.beta()};
}

// Direct check of a reported violation against the tables.
bool witness_is_genuine(const FactorTables& t, const std::vector<Element>& w) {
  if (w.empty()) return false;
  const int nn = static_cast<int>(t.n.size()), nh = static_cast<int>(t.h.size());
  switch (w[0]) {
    case 1: {
      if (w.size() == 2) {
        for (const auto* tab : {&t.alpha, &t.beta}) {
          if (w[1] >= static_cast<int>(tab->size())) continue;
          std::vector<int> img = (*tab)[w[1]];
          std::sort(img.begin(), img.end());
          for (int i = 0; i < static_cast<int>(img.size()); ++i)
            if (img[i] != i) return true;
        }
        return false;
      }
      if (w.size() == 3)
        return w[1] == 0 && ((w[2] < nn && t.alpha[0][w[2]] != w[2]) || (w[2] < nh && t.beta[0][w[2]] != w[2]));
      if (w.size() == 4) {
        const int x = w[1], y = w[2], z = w[3];
        const bool alpha_fails = x < nh && y < nh && z < nn && t.alpha[t.h[x][y]][z] != t.alpha[x][t.alpha[y][z]];
        const bool beta_fails = x < nn && y < nn && z < nh && t.beta[t.n[x][y]][z] != t.beta[y][t.beta[x][z]];
        return alpha_fails || beta_fails;
      }
      return false;
    }
    case 2: {
      const int h = w[1], a = w[2], b = w[3];
      return t.alpha[h][t.n[a][b]] != t.n[t.alpha[h][a]][t.alpha[t.beta[a][h]][b]];
    }
    case 3: {
      const int m = w[1], a = w[2], b = w[3];
      return t.beta[m][t.h[a][b]] != t.h[t.beta[t.alpha[b][m]][a]][t.beta[m][b]];
    }
    default:
      return false;
  }
}

Verdict ac1_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  Verdict v;
  int per_mode[2] = {0, 0}, full[2] = {0, 0}, deficient[2] = {0, 0};
  double worst_good = 0, best_bad = 1e300;
  for (int n : {2, 3, 4, 6, 8}) {
    const KnitProduct d = build_dihedral(n);
    const auto sub = build_subspace(left_regular(d.group), CVector::Unit(2 * n, 0));
    for (Indexing ix : {Indexing::ByN, Indexing::ByH}) {
      const Index need = square_kappa(d.factorization, ix);
      for (int t = 0; t < 12; ++t) {
        const Index kappa = std::max<Index>(1, need - 1 + t % 3);
        const bool dependent_channels = t % 4 == 3;
        const auto scheme = build_scheme(sub, gen::channels(rng, 2 * n, kappa, dependent_channels), d.factorization, ix);
        const bool full_rank = scheme.rank() == 2 * n;
        const ConditionReport c = check_equivalence(scheme, 3, 5000 + t);
        const double residual = dual_expansion_check(scheme);
        const int m = ix == Indexing::ByN ? 0 : 1;
        ++per_mode[m];
        (full_rank ? full : deficient)[m]++;
        if (full_rank) worst_good = std::max(worst_good, residual);
        else best_bad = std::min(best_bad, residual);
        if (!c.agree() || c.full_rank != full_rank || (residual < 1e-9) != full_rank) {
          v.pass = false;
          v.detail += " mismatch(N=" + std::to_string(n) + ",kappa=" + std::to_string(kappa) + ")";
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (int m = 0; m < 2; ++m)
    if (per_mode[m] < 50 || full[m] == 0 || deficient[m] == 0) v.pass = false;
  if (secs >= 30) v.pass = false;
  v.detail = "ByN " + std::to_string(per_mode[0]) + " schemes (" + std::to_string(full[0]) + " full, " +
             std::to_string(deficient[0]) + " deficient), ByH " + std::to_string(per_mode[1]) + " (" +
             std::to_string(full[1]) + ", " + std::to_string(deficient[1]) + "); worst full-rank residual " +
             fmt(worst_good) + ", smallest deficient residual " + fmt(best_bad) + "; " + fmt(secs) + " s" + v.detail;
  return v;
}

Verdict ac2_interpolation() {
  Rng rng(1002);
  Verdict v;
  double worst_interp = 0, worst_inv = 0;
  int cases = 0;
  for (int n : {2, 3, 4, 6, 8}) {
    const KnitProduct d = build_dihedral(n);
    const auto lr = left_regular(d.group);
    for (Indexing ix : {Indexing::ByN, Indexing::ByH})
      for (int t = 0; t < 4; ++t) {
        const CVector a = t < 2 ? CVector::Unit(2 * n, 0) : random_complex_vector(rng, 2 * n);
        const auto sub = build_subspace(lr, a);
        const Index kappa = square_kappa(d.factorization, ix);
        const auto scheme = build_scheme(sub, gen::channels(rng, 2 * n, kappa, false), d.factorization, ix);
        if (!scheme.reconstructing) continue;
        ++cases;
        worst_interp = std::max(worst_interp, interpolation_deviation(scheme));
        worst_inv = std::max(worst_inv, max_abs_diff(scheme.m_s->m_s, CMatrix(scheme.r.stacked.inverse())));
      }
  }
  v.pass = cases >= 30 && worst_interp <= 1e-9 && worst_inv <= 1e-9;
  v.detail = std::to_string(cases) + " square cases; max interpolation deviation " + fmt(worst_interp) +
             ", max |M_S - R^-1| " + fmt(worst_inv);
  return v;
}

Verdict ac3_compatible_left_inverses() {
  Rng rng(1003);
  Verdict v;
  int count = 0, structure_failures = 0;
  double worst_left = 0, worst_shift_complex = 0;
  for (int round = 0; count < 200; ++round) {
    for (int n : {2, 3, 4, 6}) {
      const KnitProduct d = build_dihedral(n);
      const auto lr = left_regular(d.group);
      for (Indexing ix : {Indexing::ByN, Indexing::ByH}) {
        const bool real_data = round % 2 == 0;
        const CVector a = real_data ? CVector::Unit(2 * n, 0) : random_complex_vector(rng, 2 * n);
        const auto sub = build_subspace(lr, a);
        const Index kappa = square_kappa(d.factorization, ix) + 1 + round % 2;
        const auto ch = real_data ? real_channels(rng, 2 * n, kappa) : gen::channels(rng, 2 * n, kappa, false);
        const auto r = build_cross_cov_matrix(lr, a, ch, d.factorization, ix);
        const LeftInverseFamily fam = make_left_inverse_family(r.stacked);
        if (!fam.full_column_rank()) continue;
        for (int s = 0; s < 5 && count < 200; ++s, ++count) {
          const SeedRows seed = extract_S(gen::random_left_inverse(rng, fam), r);
          const GCompatibleLeftInverse m = build_M_S(seed, r);
          worst_left = std::max(worst_left, max_abs_diff(m.m_s * r.stacked, CMatrix::Identity(2 * n, 2 * n)));
          if (real_data) {
            if (!verify_shift_structure(m.m_s, r.layout, kappa, 0.0)) ++structure_failures;
          } else {
            const double dev = shift_structure_deviation(m.m_s, r.layout, kappa);
            worst_shift_complex = std::max(worst_shift_complex, dev);
            if (dev > 1e-12) ++structure_failures;
          }
        }
      }
    }
  }
  v.pass = worst_left <= 1e-10 && structure_failures == 0;
  v.detail = std::to_string(count) + " seeds; max |M_S R - I| " + fmt(worst_left) +
             "; shift-structure failures " + std::to_string(structure_failures) +
             " (exact on real permutation data, max deviation otherwise " + fmt(worst_shift_complex) + ")";
  return v;
}

Verdict ac4_circulant() {
  Rng rng(1004);
  Verdict v;
  int checked = 0, failed = 0;
  const auto check = [&](const UnitaryRepresentation& rep, const CVector& a, const KnitFactorization& f, Index kappa) {
    const auto r = build_cross_cov_matrix(rep, a, gen::channels(rng, rep.dim(), kappa, false), f, Indexing::ByN);
    const Index rows = f.n_order(), shift = f.h_order();
    const CMatrix pinv_adj = pseudoinverse(r.stacked).adjoint();
    ++checked;
    if (!check_h_circulant(r.stacked, rows, shift, kappa, 1e-9) || !check_h_circulant(pinv_adj, rows, shift, kappa, 1e-9))
      ++failed;
  };
  for (int n : {2, 3, 4, 6, 8}) {
    const KnitProduct d = build_dihedral(n);
    const auto lr = left_regular(d.group);
    const auto conj = validate_representation(d.group, gen::conjugated_regular(*d.group, gen::random_unitary(rng, 2 * n)));
    for (Index kappa : {1, 2, 3, 4}) {
      check(lr, CVector::Unit(2 * n, 0), d.factorization, kappa);
      check(lr, random_complex_vector(rng, 2 * n), d.factorization, kappa);
      check(conj, random_complex_vector(rng, 2 * n), d.factorization, kappa);
    }
  }
  for (const TestGroup& tg : test_groups()) {
    if (!is_generator_ordered(tg.f.group(), tg.f.n_elements())) continue;
    const auto lr = left_regular(tg.f.group_ptr());
    for (Index kappa : {1, 3}) check(lr, random_complex_vector(rng, lr.dim()), tg.f, kappa);
  }
  v.pass = failed == 0 && checked > 0;
  v.detail = std::to_string(checked) + " ByN matrices, " + std::to_string(failed) + " failures (R and pinv(R)^*, tol 1e-9)";
  return v;
}

Verdict ac5_knit_axioms() {
  Rng rng(1005);
  Verdict v;
  int groups = 0, mutations = 0, rejected = 0, genuine = 0;
  bool dihedral_beta_identity = true;
  std::string bad;
  for (const TestGroup& tg : test_groups()) {
    if (tg.table.size() > 48) continue;
    ++groups;
    const FactorTables t = tables_of(tg.f);
    bool ok = oracle::knit_property_failure(t.n, t.h, t.alpha, t.beta) == 0;
    try {
      const KnitProduct k =
          knit_external(FiniteGroup::from_cayley_table(t.n), FiniteGroup::from_cayley_table(t.h), t.alpha, t.beta);
      ok = ok && k.group->cayley() == oracle::knit_table(t.n, t.h, t.alpha, t.beta) &&
           k.factorization.alpha() == t.alpha && k.factorization.beta() == t.beta && k.inverse_formula_agrees &&
           oracle::find_isomorphism(k.group->cayley(), tg.table).has_value();
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) bad += " " + tg.name;
    if (tg.name[0] == 'D' && std::isdigit(static_cast<unsigned char>(tg.name[1]))) {
      const KnitFactorization internal = factor_internal(tg.f.group_ptr(), tg.f.n_elements(), tg.f.h_elements());
      dihedral_beta_identity = dihedral_beta_identity && internal.beta_is_identity() && tg.f.beta_is_identity();
    }

    const int nn = static_cast<int>(t.n.size()), nh = static_cast<int>(t.h.size());
    if (nh < 2 || nn < 2) continue;
    for (int m = 0; m < 3; ++m) {
      FactorTables mut = t;
      const int row = gen::uniform_int(rng, 1, nn - 1);
      const int i = gen::uniform_int(rng, 0, nh - 1);
      int j = gen::uniform_int(rng, 0, nh - 2);
      if (j >= i) ++j;
      std::swap(mut.beta[row][i], mut.beta[row][j]);
      if (oracle::knit_property_failure(mut.n, mut.h, mut.alpha, mut.beta) == 0) continue;
      ++mutations;
      try {
        knit_external(FiniteGroup::from_cayley_table(mut.n), FiniteGroup::from_cayley_table(mut.h), mut.alpha, mut.beta);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::KnitAxiomViolation) {
          ++rejected;
          if (witness_is_genuine(mut, e.witness())) ++genuine;
        }
      }
    }
  }
  v.pass = bad.empty() && dihedral_beta_identity && mutations > 0 && rejected == mutations && genuine == mutations;
  v.detail = std::to_string(groups) + " groups validated" + (bad.empty() ? "" : " (failed:" + bad + ")") +
             "; dihedral beta = id " + (dihedral_beta_identity ? "yes" : "no") + "; " + std::to_string(rejected) + "/" +
             std::to_string(mutations) + " mutated beta tables rejected, " + std::to_string(genuine) +
             " with a verified witness";
  return v;
}

struct Instance {
  std::string name;
  SamplingScheme scheme;
};

std::vector<Instance> reconstruction_instances(Rng& rng) {
  std::vector<Instance> out;
  const auto add = [&](const std::string& name, const UnitaryRepresentation& rep, const KnitFactorization& f,
                       Indexing ix, Index kappa) {
    const auto sub = build_subspace(rep, random_complex_vector(rng, rep.dim()));
    out.push_back({name, build_scheme(sub, gen::channels(rng, rep.dim(), kappa, false), f, ix)});
  };
  for (int n : {2, 3, 4, 6}) {
    const KnitProduct d = build_dihedral(n);
    const auto conj = validate_representation(d.group, gen::conjugated_regular(*d.group, gen::random_unitary(rng, 2 * n)));
    const std::string name = "D" + std::to_string(2 * n);
    add(name + "/N", left_regular(d.group), d.factorization, Indexing::ByN, 3);
    add(name + "/N/conj", conj, d.factorization, Indexing::ByN, 2);
    add(name + "/H", left_regular(d.group), d.factorization, Indexing::ByH, n + 1);
    add(name + "/H/conj", conj, d.factorization, Indexing::ByH, n);
  }
  for (const TestGroup& tg : test_groups()) {
    if (tg.name != "S4=S3*Z4" && tg.name != "A4=V4*Z3") continue;
    const auto lr = left_regular(tg.f.group_ptr());
    if (tg.name == "S4=S3*Z4") add(tg.name + "/H", lr, tg.f, Indexing::ByH, 7);
    else add(tg.name + "/N", lr, tg.f, Indexing::ByN, 4);
  }
  return out;
}

Verdict ac6_oracle() {
  Rng rng(1006);
  Verdict v;
  double worst = 0;
  int instances = 0;
  for (Instance& in : reconstruction_instances(rng)) {
    if (!in.scheme.reconstructing) {
      v.pass = false;
      v.detail += " " + in.name + " not reconstructing;";
      continue;
    }
    ++instances;
    const SamplingSubspace& sub = in.scheme.subspace;
    const CosetLayout& layout = in.scheme.layout();
    for (int t = 0; t < 100; ++t) {
      const CVector f = random_subspace_element(sub, rng).first;
      const SampleSet samples = take_samples(in.scheme, f);
      const CVector got = reconstruct(in.scheme, samples);
      const CVector coef = oracle::least_squares(sub.orbit, f);
      const CVector want = sub.orbit * coef;
      const CVector from_samples = layout.from_columns(oracle::least_squares(in.scheme.r.stacked, samples.flatten()));
      worst = std::max({worst, relative_error(got, want), relative_error(reconstruct_coefficients(in.scheme, samples), coef),
                        relative_error(sub.orbit * from_samples, want)});
    }
  }
  v.pass = v.pass && worst <= 1e-9 && instances > 0;
  v.detail = std::to_string(instances) + " instances x 100 f; max relative error " + fmt(worst) + v.detail;
  return v;
}

Verdict ac7_shifting() {
  Rng rng(1007);
  Verdict v;
  double worst = 0;
  int instances = 0;
  const auto run = [&](const UnitaryRepresentation& rep) {
    const FiniteGroup& g = rep.group();
    const auto sub = build_subspace(rep, random_complex_vector(rng, rep.dim()));
    ++instances;
    for (int t = 0; t < 100; ++t) {
      const CVector alpha = random_complex_vector(rng, g.order());
      const CVector base = synthesize(sub, alpha);
      for (Element s = 0; s < g.order(); ++s)
        worst = std::max(worst, relative_error(synthesize(sub, left_translate(g, s, alpha)), CVector(rep.matrix(s) * base)));
    }
  };
  for (int n : {2, 3, 4, 6, 8}) {
    const KnitProduct d = build_dihedral(n);
    run(left_regular(d.group));
    run(validate_representation(d.group, gen::conjugated_regular(*d.group, gen::random_unitary(rng, 2 * n))));
    if (n >= 3) run(validate_representation(d.group, gen::dihedral_2d(n)));
  }
  for (const TestGroup& tg : test_groups())
    if (tg.name == "S4=S3*Z4" || tg.name == "A4=V4*Z3") run(left_regular(tg.f.group_ptr()));
  v.pass = worst <= 1e-10;
  v.detail = std::to_string(instances) + " instances x 100 alpha x all s; max relative error " + fmt(worst);
  return v;
}

Verdict ac8_cli() {
  Verdict v;
  const auto dir = cli::work_dir("ac8");
  int identical = 0, runs = 0;
  for (const char* config : {"d6_byn_deltas.json", "d6_byh_k1.json", "d6_byh_k3.json", "cayley_s3.json", "knit_d8.json"}) {
    std::string outs[2];
    for (int i = 0; i < 2; ++i) {
      const auto out = dir / (std::string(config) + "." + std::to_string(i));
      cli::fs::remove(out);
      cli::run("run --config \"" + cli::data(config) + "\" --out \"" + out.string() + "\"", dir / "stderr.txt");
      outs[i] = cli::slurp(out);
    }
    ++runs;
    if (!outs[0].empty() && outs[0] == outs[1]) ++identical;
  }
  std::string golden_detail;
  int golden_ok = 0, golden_total = 0;
  for (const char* name : {"d6_byn_deltas", "d6_byh_k3"}) {
    ++golden_total;
    const auto out = dir / (std::string(name) + ".golden_run.json");
    cli::run("run --config \"" + cli::data(std::string(name) + ".json") + "\" --out \"" + out.string() + "\"",
             dir / "stderr.txt");
    try {
      const std::string diff = cli::json_diff(cli::json::parse(cli::slurp(cli::golden(std::string(name) + ".json"))),
                                              cli::json::parse(cli::slurp(out)), 1e-9);
      if (diff.empty()) ++golden_ok;
      else golden_detail += " " + std::string(name) + ": " + diff;
    } catch (const std::exception& e) {
      golden_detail += " " + std::string(name) + ": " + e.what();
    }
  }
  v.pass = identical == runs && golden_ok == golden_total;
  v.detail = std::to_string(identical) + "/" + std::to_string(runs) + " configs byte-identical across two runs; " +
             std::to_string(golden_ok) + "/" + std::to_string(golden_total) + " D6 golden reports match" + golden_detail;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 condition equivalence on D2N", ac1_equivalence},
      {"AC2 interpolation in square cases", ac2_interpolation},
      {"AC3 G-compatible left inverses", ac3_compatible_left_inverses},
      {"AC4 circulant inheritance", ac4_circulant},
      {"AC5 knit product axioms", ac5_knit_axioms},
      {"AC6 reconstruction vs least-squares oracle", ac6_oracle},
      {"AC7 shifting property", ac7_shifting},
      {"AC8 CLI determinism and golden reports", ac8_cli},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
