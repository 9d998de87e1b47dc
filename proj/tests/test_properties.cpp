#include "colorhom/catalog.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace colorhom;

namespace {

const RationalField Q;

template <ScalarField F>
ColorHomAlgebra<F> perturb(const ColorHomAlgebra<F>& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, a.dim() - 1);
  std::uniform_int_distribution<long long> coef(1, 5);
  auto c = a.structure();
  const auto i = pick(rng), j = pick(rng);
  const auto& g = a.basis().group();
  const auto target = g.add(a.basis().degree(i), a.basis().degree(j));
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (a.basis().degree(k) == target) {
      c(i, j, k) = c(i, j, k) + a.field().from_int(coef(rng));
      break;
    }
  return a.with(c, a.alpha());
}

template <ScalarField F>
void expect_checks_agree_with_oracle(const ColorHomAlgebra<F>& a, const std::string& label) {
  for (const auto& [name, id] : oracle::identities<F>()) {
    const bool lib = run_algebra_check(a, name).passes();
    EXPECT_EQ(lib, oracle::holds_on_basis(a, id)) << label << " " << name;
    const auto bad = oracle::failures(a, id, 0, 100);
    if (lib) EXPECT_EQ(bad, 0u) << label << " " << name;
  }
}

}  // namespace

TEST(Theorems, HomNovikovCatalogSatisfiesConsequences) {
  auto run = [](const auto& entries) {
    for (const auto& e : entries) {
      EXPECT_TRUE(check_lemma_nl(e.algebra)) << e.name;
      EXPECT_TRUE(check_lie_admissible(e.algebra)) << e.name;
      EXPECT_TRUE(check_hom_lie(commutator_algebra(e.algebra))) << e.name;
    }
  };
  run(hom_novikov_catalog(Q));
  run(hom_novikov_catalog(PrimeField(5)));
  run(color_catalog(PrimeField(7)));
}

TEST(Theorems, YauTwistByFoundWeakMorphisms) {
  std::size_t pairs = 0;
  for (const auto& e : hom_novikov_catalog(Q)) {
    if (e.algebra.dim() > 3) continue;
    MapSearch<RationalField> req;
    req.budget = 2000;
    const bool mult = check_multiplicative(e.algebra).passes();
    for (const auto& beta : search_maps(e.algebra, req)) {
      ++pairs;
      const auto tw = yau_twist(e.algebra, beta);
      EXPECT_TRUE(check_hom_novikov(tw)) << e.name;
      if (mult && is_morphism(e.algebra, e.algebra, beta)) EXPECT_TRUE(check_multiplicative(tw)) << e.name;
    }
  }
  EXPECT_GT(pairs, 10u);
}

TEST(Theorems, CentroidScalarsAndDirectSums) {
  const auto entries = hom_novikov_catalog(Q);
  for (const auto& e : entries) {
    for (long long l : {1, 2, -1, 3}) {
      const auto beta = GradedLinearMap<RationalField>::scalar(Q, e.algebra.basis(), l);
      EXPECT_TRUE(check_hom_novikov(centroid_twist(e.algebra, beta))) << e.name << " " << l;
    }
  }
  for (std::size_t i = 0; i < entries.size(); i += 3)
    for (std::size_t j = 0; j < entries.size(); j += 4) {
      const auto& a = entries[i].algebra;
      const auto& b = entries[j].algebra;
      if (!(a.bicharacter() == b.bicharacter())) continue;
      const auto s = direct_sum(a, b);
      EXPECT_EQ(s.dim(), a.dim() + b.dim());
      EXPECT_TRUE(check_hom_novikov(s)) << entries[i].name << " + " << entries[j].name;
    }
}

TEST(Theorems, PowerTwistsOfMultiplicativeEntries) {
  for (const auto& e : hom_novikov_catalog(Q)) {
    if (!check_multiplicative(e.algebra)) continue;
    for (unsigned n : {0u, 1u, 2u, 3u}) {
      const auto p = power_twist(e.algebra, n);
      EXPECT_TRUE(check_hom_novikov(p)) << e.name << " " << n;
      EXPECT_TRUE(check_multiplicative(p)) << e.name << " " << n;
    }
  }
}

TEST(Theorems, QuadraticCatalogConsequences) {
  for (const auto& e : quadratic_catalog(Q)) {
    if (e.form.companion == GradedLinearMap<RationalField>::identity(Q, e.algebra.basis())) {
      const auto c = quadratic_commutator(e.algebra, e.form);
      EXPECT_TRUE(check_quadratic_hom_lie(c.algebra, c.form)) << e.name;
    }
    if (e.form.companion == e.algebra.alpha() && check_involutive(e.algebra)) {
      const auto u = quadratic_untwist_involutive(e.algebra, e.form);
      EXPECT_TRUE(check_hom_novikov(u.algebra)) << e.name;
      EXPECT_TRUE(check_quadratic_structure(u.algebra, u.form)) << e.name;
    }
  }
}

TEST(Oracle, ChecksAgreeOnThreeInstances) {
  const auto p3 = truncated_polynomial(3, Q);
  const auto euler3 = derivation_product(p3, euler_derivation(p3));
  expect_checks_agree_with_oracle(euler3, "euler_novikov(3)");
  const auto grass = grassmann_algebra(Q);
  expect_checks_agree_with_oracle(derivation_product(grass, grassmann_degree_derivation(grass)), "grassmann_novikov");
  const PrimeField f(7);
  const auto qp = quantum_plane(f);
  expect_checks_agree_with_oracle(derivation_product(qp, quantum_plane_degree_derivation(qp)), "quantum_plane_novikov");
}

TEST(Oracle, RandomPerturbationsAgree) {
  std::mt19937_64 rng(11);
  const auto ids = oracle::identities<RationalField>();
  for (const auto& e : hom_novikov_catalog(Q)) {
    for (int t = 0; t < 5; ++t) {
      const auto bad = perturb(e.algebra, rng);
      for (const auto* name : {"hom_novikov", "left_symmetric", "hom_associative", "lie_admissible"})
        EXPECT_EQ(run_algebra_check(bad, name).passes(), oracle::holds_on_basis(bad, ids.at(name))) << e.name << " " << name;
    }
  }
}

TEST(Oracle, FailingChecksAreDetectedBySampling) {
  const auto ids = oracle::identities<RationalField>();
  const auto p4 = truncated_polynomial(4, Q);
  const auto dt4 = derivation_product(p4, dt_derivation(p4), Mode::unchecked);
  ASSERT_FALSE(check_hom_novikov(dt4));
  EXPECT_GT(oracle::failures(dt4, ids.at("hom_novikov"), 0, 100), 0u);
  EXPECT_FALSE(oracle::holds_on_basis(dt4, ids.at("hom_novikov")));
}

TEST(Witness, ReportedTriplesReallyFail) {
  std::mt19937_64 rng(3);
  for (const auto& e : hom_novikov_catalog(Q)) {
    for (int t = 0; t < 4; ++t) {
      const auto bad = perturb(e.algebra, rng);
      const auto v = check_hom_novikov(bad);
      if (v) continue;
      const auto& w = *v.witness();
      ASSERT_EQ(w.indices.size(), 3u);
      EXPECT_NE(w.left, w.right);
      oracle::Evaluator<RationalField> ev(bad);
      auto unit = [&](std::size_t i) {
        return oracle::Hv<RationalField>{bad.basis().degree(i).coords, bad.basis_vector(i)};
      };
      const auto x = unit(w.indices[0]), y = unit(w.indices[1]), z = unit(w.indices[2]);
      const auto ids = oracle::identities<RationalField>();
      EXPECT_FALSE(ids.at("hom_novikov")(ev, x, y, z)) << e.name;
    }
  }
}

TEST(Witness, ScanOrderIsLexicographic) {
  const auto p4 = truncated_polynomial(4, Q);
  const auto dt4 = derivation_product(p4, dt_derivation(p4), Mode::unchecked);
  const auto v = check_hom_novikov(dt4);
  ASSERT_FALSE(v);
  ASSERT_EQ(v.witness()->identity, "n2");
  const auto ls = oracle::identities<RationalField>().at("left_symmetric");
  oracle::Evaluator<RationalField> ev(dt4);
  auto unit = [&](std::size_t i) { return oracle::Hv<RationalField>{dt4.basis().degree(i).coords, dt4.basis_vector(i)}; };
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < 4 && first.empty(); ++i)
    for (std::size_t j = 0; j < 4 && first.empty(); ++j)
      for (std::size_t k = 0; k < 4 && first.empty(); ++k)
        if (!ls(ev, unit(i), unit(j), unit(k))) first = {i, j, k};
  EXPECT_EQ(v.witness()->indices, first);
}

TEST(Conclusions, StrictConstructionsRejectBadInputs) {
  const auto p3 = truncated_polynomial(3, Q);
  const auto dt3 = derivation_product(p3, dt_derivation(p3), Mode::unchecked);
  const auto scale = GradedLinearMap<RationalField>::scalar(Q, p3.basis(), 2);
  EXPECT_THROW(yau_twist(dt3, scale), PreconditionError);
  EXPECT_THROW(derivation_product(p3, dt_derivation(p3)), PreconditionError);
  EXPECT_NO_THROW(yau_twist(dt3, scale, Mode::unchecked));
}
