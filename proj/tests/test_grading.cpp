#include "colorhom/grading.hpp"

#include <gtest/gtest.h>

using namespace colorhom;

namespace {

// Z ⊕ Z_3 over F_7 with ε(g0,g0) = -1, ε(g0,g1) = 2 (a cube root of unity).
Bicharacter<PrimeField> mixed_f7() {
  const PrimeField f(7);
  Matrix<ModInt> t(2, 2);
  t(0, 0) = f.from_int(-1);
  t(0, 1) = f.from_int(2);
  t(1, 0) = f.from_int(4);
  t(1, 1) = f.one();
  return {f, GradeGroup(1, {3}), t};
}

// Every element with free part in [-range, range] and all residues.
std::vector<GroupElement> grid(const GradeGroup& g, std::int64_t range) {
  std::vector<GroupElement> out{GroupElement{{}}};
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    std::vector<GroupElement> next;
    const auto ord = g.order(i);
    const std::int64_t lo = ord ? 0 : -range, hi = ord ? *ord - 1 : range;
    for (const auto& e : out)
      for (std::int64_t c = lo; c <= hi; ++c) {
        auto f = e;
        f.coords.push_back(c);
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

template <ScalarField F>
void expect_bicharacter_laws(const Bicharacter<F>& eps, std::int64_t range) {
  const auto& g = eps.group();
  const auto& field = eps.field();
  const auto elems = grid(g, range);
  for (const auto& a : elems) {
    EXPECT_EQ(eps(a, g.zero()), field.one());
    EXPECT_EQ(eps(g.zero(), a), field.one());
    const auto self = eps(a, a);
    EXPECT_TRUE(self == field.one() || self == -field.one());
    for (const auto& b : elems) {
      EXPECT_EQ(eps(a, b) * eps(b, a), field.one());
      for (const auto& c : elems) {
        EXPECT_EQ(eps(a, g.add(b, c)), eps(a, b) * eps(a, c));
        EXPECT_EQ(eps(g.add(a, b), c), eps(a, c) * eps(b, c));
      }
    }
  }
}

}  // namespace

TEST(GradeGroup, CanonicalizesTorsionCoordinates) {
  const GradeGroup g(1, {3, 2});
  EXPECT_EQ(g.element({-4, 5, -1}).coords, (std::vector<std::int64_t>{-4, 2, 1}));
  EXPECT_EQ(g.add(g.element({1, 2, 1}), g.element({2, 2, 1})).coords, (std::vector<std::int64_t>{3, 1, 0}));
  EXPECT_EQ(g.negate(g.element({1, 1, 1})).coords, (std::vector<std::int64_t>{-1, 2, 1}));
  EXPECT_FALSE(g.is_canonical(GroupElement{{0, 3, 0}}));
  EXPECT_THROW(g.element({1, 2}), StructuralError);
  EXPECT_THROW(GradeGroup(0, {1}), StructuralError);
}

TEST(Bicharacter, ValidationReports) {
  const RationalField q;
  const auto z2 = GradeGroup::cyclic(2);
  EXPECT_TRUE(validate_bicharacter(q, z2, Matrix<Rational>(1, 1, Rational(1))).passes());
  EXPECT_TRUE(validate_bicharacter(q, z2, Matrix<Rational>(1, 1, Rational(-1))).passes());

  const auto bad = validate_bicharacter(q, z2, Matrix<Rational>(1, 1, Rational(2)));
  EXPECT_EQ(bad.violated, BicharacterReport::Axiom::skew);
  EXPECT_EQ(bad.i, 0u);
  EXPECT_EQ(bad.j, 0u);

  // Skew holds (2 · 1/2 = 1) on a free generator pair but 2^2 ≠ 1 for the Z_2 generator.
  Matrix<Rational> t(2, 2, Rational(1));
  t(0, 1) = Rational(1, 2);
  t(1, 0) = Rational(2);
  const auto tor = validate_bicharacter(q, GradeGroup(1, {2}), t);
  EXPECT_EQ(tor.violated, BicharacterReport::Axiom::torsion_compatibility);
  EXPECT_EQ(tor.i, 1u);
  EXPECT_EQ(tor.j, 0u);
  EXPECT_TRUE(validate_bicharacter(q, GradeGroup(2, {}), t).passes());

  EXPECT_THROW(validate_bicharacter(q, z2, Matrix<Rational>(2, 2, Rational(1))), StructuralError);
  EXPECT_THROW(Bicharacter<RationalField>(q, z2, Matrix<Rational>(1, 1, Rational(2))), StructuralError);
}

TEST(Bicharacter, Evaluation) {
  const RationalField q;
  const auto super = Bicharacter<RationalField>::super(q);
  const auto& g = super.group();
  EXPECT_EQ(super(g.generator(0), g.generator(0)), Rational(-1));
  EXPECT_EQ(super(g.zero(), g.generator(0)), Rational(1));

  Matrix<Rational> t(2, 2, Rational(1));
  t(1, 1) = -1;
  const Bicharacter<RationalField> mixed(q, GradeGroup(1, {2}), t);
  EXPECT_EQ(mixed(mixed.group().element({2, 1}), mixed.group().element({0, 1})), Rational(-1));

  const auto f7 = mixed_f7();
  const auto& h = f7.group();
  // ε((1,0),(0,1)) = 2 and ε((0,1),(1,0)) = 4 = 2^{-1}.
  EXPECT_EQ(f7(h.element({1, 0}), h.element({0, 1})), f7.field().from_int(2));
  EXPECT_EQ(f7(h.element({0, 1}), h.element({1, 0})), f7.field().from_int(4));
  // Free exponents multiply: ε((-3,0),(2,2)) = (-1)^{-6} · 2^{-6} = 1.
  EXPECT_EQ(f7(h.element({-3, 0}), h.element({2, 2})), f7.field().one());
}

TEST(Bicharacter, SuperLawsOnExhaustiveGrid) { expect_bicharacter_laws(Bicharacter<RationalField>::super(RationalField{}), 0); }

TEST(Bicharacter, MixedLawsOnExhaustiveGrid) { expect_bicharacter_laws(mixed_f7(), 3); }

TEST(Bicharacter, FreeRationalLaws) {
  const RationalField q;
  Matrix<Rational> t(2, 2, Rational(1));
  t(0, 1) = Rational(3, 2);
  t(1, 0) = Rational(2, 3);
  expect_bicharacter_laws(Bicharacter<RationalField>(q, GradeGroup(2, {}), t), 2);
}
