#include "colorhom/catalog.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace colorhom;

namespace {

const RationalField Q;
using Map = GradedLinearMap<RationalField>;

template <ScalarField F>
void expect_claims_hold(const std::vector<CatalogEntry<F>>& entries) {
  const auto ids = oracle::identities<F>();
  for (const auto& e : entries) {
    EXPECT_FALSE(verify_claims(e)) << e.name;
    EXPECT_FALSE(e.provenance.empty()) << e.name;
    for (const auto& c : e.claims) {
      if (!ids.contains(c)) continue;
      EXPECT_EQ(oracle::failures(e.algebra, ids.at(c), 17, 200), 0u) << e.name << " " << c;
    }
  }
}

std::set<std::vector<std::string>> as_strings(const std::vector<Map>& maps) {
  std::set<std::vector<std::string>> out;
  for (const auto& m : maps) {
    std::vector<std::string> cells;
    for (std::size_t r = 0; r < m.matrix().rows(); ++r)
      for (std::size_t c = 0; c < m.matrix().cols(); ++c) cells.push_back(Q.format(m.matrix()(r, c)));
    out.insert(cells);
  }
  return out;
}

}  // namespace

TEST(Catalog, HomNovikovClaimsHold) {
  const auto entries = hom_novikov_catalog(Q);
  EXPECT_GE(entries.size(), 10u);
  expect_claims_hold(entries);
  expect_claims_hold(hom_novikov_catalog(PrimeField(7)));
}

TEST(Catalog, ColorInstances) {
  const PrimeField f(7);
  const auto w = cube_root_of_unity(f);
  EXPECT_FALSE(w == f.one());
  EXPECT_EQ(w * w * w, f.one());
  EXPECT_THROW(cube_root_of_unity(PrimeField(5)), StructuralError);

  const auto entries = color_catalog(f);
  expect_claims_hold(entries);
  const auto& qp = entries.front().algebra;
  EXPECT_EQ(qp.eps(1, 2), w);
  EXPECT_EQ(qp.eps(2, 1), inverse(w));
  EXPECT_EQ(qp.eps(3, 3), f.one());
  EXPECT_TRUE(check_lie_admissible(entries.back().algebra));
  EXPECT_TRUE(check_lemma_nl(entries.back().algebra));
  expect_claims_hold(color_catalog(PrimeField(13)));
}

TEST(Catalog, ClaimFailureIsReported) {
  CatalogEntry<RationalField> bad{"bad", "none", truncated_polynomial(3, Q), {"hom_novikov", "lie_algebra"}};
  const auto v = verify_claims(bad);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->first, "lie_algebra");
}

TEST(Catalog, ScalingMorphism) {
  const auto p = truncated_polynomial(3, Q);
  const auto s = scaling_morphism(p, Rational(3), polynomial_weights(3));
  EXPECT_EQ(s.matrix(), Matrix<Rational>::diagonal(Q, {1, 3, 9}));
  EXPECT_TRUE(is_morphism(p, p, s));
  EXPECT_THROW(scaling_morphism(p, Rational(3), {0, 1}), StructuralError);
}

TEST(Catalog, LieInstances) {
  for (const auto& l : {solvable_lie_2d(Q), sl2(Q), heisenberg(Q)}) {
    EXPECT_TRUE(check_hom_lie(l));
    EXPECT_TRUE(oracle::holds_on_basis(l, oracle::identities<RationalField>().at("hom_lie")));
  }
}

TEST(SearchMaps, DerivationsOfTruncatedCubic) {
  // Derivations of Q[t]/(t³): t ↦ a·t + b·t², t² ↦ 2a·t², 1 ↦ 0.
  std::set<std::vector<std::string>> expected;
  for (long long a : {0, 1})
    for (long long b : {0, 1, 2}) {
      Matrix<Rational> m(3, 3);
      m(1, 1) = a;
      m(2, 1) = b;
      m(2, 2) = 2 * a;
      expected.insert(*as_strings({Map(truncated_polynomial(3, Q).basis(), m)}).begin());
    }
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::derivation;
  req.entries = {0, 1, 2};
  req.budget = 20000;
  const auto p = truncated_polynomial(3, Q);
  const auto hits = search_maps(p, req);
  EXPECT_EQ(hits.size(), 6u);
  EXPECT_EQ(as_strings(hits), expected);
  EXPECT_FALSE(as_strings(hits).contains(*as_strings({dt_derivation(p)}).begin()));
  EXPECT_TRUE(as_strings(hits).contains(*as_strings({euler_derivation(p)}).begin()));
}

TEST(SearchMaps, DiagonalDerivations) {
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::derivation;
  req.diagonal_only = true;
  const auto p = truncated_polynomial(3, Q);
  const auto hits = search_maps(p, req);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(as_strings(hits), as_strings({Map::zero(p.basis()), euler_derivation(p)}));
}

TEST(SearchMaps, WeakMorphismsOfZeroProduct) {
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::weak_morphism;
  EXPECT_EQ(search_maps(zero_algebra(Q, 2), req).size(), 256u);

  const auto super = Bicharacter<RationalField>::super(Q);
  const auto& g = super.group();
  const auto line = zero_algebra(super, {g.zero(), g.generator(0)});
  const auto hits = search_maps(line, req);
  EXPECT_EQ(hits.size(), 16u);
  for (const auto& h : hits) EXPECT_TRUE(h.is_even());
}

TEST(SearchMaps, RotaBaxterOnAbelianBracket) {
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::rota_baxter;
  EXPECT_EQ(search_maps(zero_algebra(Q, 2), req).size(), 256u);

  // With α = diag(1, 2) only the matrices commuting with α, i.e. diagonal ones, survive.
  const auto z = zero_algebra(Q, 2);
  const auto tw = z.with(z.structure(), Map(z.basis(), Matrix<Rational>::diagonal(Q, {1, 2})));
  const auto hits = search_maps(tw, req);
  EXPECT_EQ(hits.size(), 16u);
  for (const auto& h : hits) EXPECT_TRUE(map_commutes_with_alpha(tw, h));
}

TEST(SearchMaps, SymmetricAutomorphismsOfAntidiagonalForm) {
  const auto p = truncated_polynomial(3, Q);
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::symmetric_automorphism;
  req.diagonal_only = true;
  EXPECT_THROW(search_maps(p, req), std::invalid_argument);
  req.form = antidiagonal_form(p);
  const auto hits = search_maps(p, req);
  EXPECT_EQ(as_strings(hits), as_strings({Map::identity(Q, p.basis()),
                                          Map(p.basis(), Matrix<Rational>::diagonal(Q, {1, -1, 1}))}));
}

TEST(SearchMaps, FConditionsAndRotaBaxterAgree) {
  const auto l = solvable_lie_2d(Q);
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::f_conditions;
  const auto hits = search_maps(l, req);
  EXPECT_FALSE(hits.empty());
  for (const auto& f : hits) {
    const auto prod = bracket_operator_product(l, f);
    EXPECT_TRUE(check_hom_novikov(prod));
    EXPECT_TRUE(oracle::holds_on_basis(prod, oracle::identities<RationalField>().at("hom_novikov")));
  }
}

TEST(SearchMaps, SampledSearchIsReproducible) {
  MapSearch<RationalField> req;
  req.predicate = MapPredicate::weak_morphism;
  req.budget = 2000;
  const auto p = truncated_polynomial(3, Q);
  const auto a = search_maps(p, req);
  const auto b = search_maps(p, req);
  EXPECT_EQ(as_strings(a), as_strings(b));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  for (const auto& m : a) EXPECT_TRUE(is_weak_morphism(p, p, m));
}

TEST(SearchMaps, RejectsBadRequests) {
  EXPECT_THROW(parse_map_predicate("frobenius"), std::invalid_argument);
  EXPECT_EQ(parse_map_predicate("is_derivation"), MapPredicate::derivation);
  MapSearch<RationalField> req;
  req.entries.clear();
  EXPECT_THROW(search_maps(zero_algebra(Q, 1), req), std::invalid_argument);
}
