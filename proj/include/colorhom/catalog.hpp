#pragma once

// Concrete instances with the properties they are known to have, and a seeded
// generate-and-filter search for linear maps satisfying a named hypothesis.

#include "colorhom/checks.hpp"
#include "colorhom/constructions.hpp"
#include "colorhom/named.hpp"
#include "colorhom/quadratic.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colorhom {

template <ScalarField F>
struct CatalogEntry {
  std::string name;
  std::string provenance;  // which statement makes the claims hold
  ColorHomAlgebra<F> algebra;
  std::vector<std::string> claims;  // names accepted by run_algebra_check
};

/// First claim that fails to verify, if any.
template <ScalarField F>
std::optional<std::pair<std::string, Verdict<scalar_t<F>>>> verify_claims(const CatalogEntry<F>& e) {
  for (const auto& c : e.claims)
    if (auto v = run_algebra_check(e.algebra, c); !v) return std::pair{c, v};
  return std::nullopt;
}

namespace detail {

template <ScalarField F>
CatalogEntry<F> certified(CatalogEntry<F> e) {
#ifdef COLORHOM_SELF_CERTIFY
  if (auto bad = verify_claims(e))
    throw std::logic_error("catalog instance " + e.name + " fails its claim " + bad->first + ": " +
                           describe(e.algebra.field(), bad->second));
#endif
  return e;
}

}  // namespace detail

/// The field itself as a one-dimensional algebra, or any algebra with zero product.
template <ScalarField F>
ColorHomAlgebra<F> zero_algebra(const Bicharacter<F>& eps, std::vector<GroupElement> degrees) {
  GradedBasis basis(eps.group(), std::move(degrees));
  return {basis, eps, StructureTensor<scalar_t<F>>(basis.dim()), GradedLinearMap<F>::identity(eps.field(), basis)};
}

template <ScalarField F>
ColorHomAlgebra<F> zero_algebra(const F& field, std::size_t dim) {
  const auto eps = Bicharacter<F>::trivial(field, GradeGroup::trivial());
  return zero_algebra(eps, std::vector<GroupElement>(dim, eps.group().zero()));
}

/// K[t]/(tⁿ) on the basis 1, t, ..., t^{n-1}, all of degree zero in the group of `eps`.
template <ScalarField F>
ColorHomAlgebra<F> truncated_polynomial(std::size_t n, const Bicharacter<F>& eps) {
  if (n == 0) throw StructuralError("truncated_polynomial: n must be positive");
  const auto basis = GradedBasis::trivial(eps.group(), n);
  StructureTensor<scalar_t<F>> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c(i, j, i + j) = eps.field().one();
  return {basis, eps, std::move(c), GradedLinearMap<F>::identity(eps.field(), basis)};
}

template <ScalarField F>
ColorHomAlgebra<F> truncated_polynomial(std::size_t n, const F& field) {
  return truncated_polynomial(n, Bicharacter<F>::trivial(field, GradeGroup::trivial()));
}

/// d/dt: e_i ↦ i·e_{i-1}. A derivation of K[t]/(tⁿ) only when n = 1 or char K divides n.
template <ScalarField F>
GradedLinearMap<F> dt_derivation(const ColorHomAlgebra<F>& a) {
  Matrix<scalar_t<F>> m(a.dim(), a.dim());
  for (std::size_t i = 1; i < a.dim(); ++i) m(i - 1, i) = a.field().from_int(static_cast<long long>(i));
  return {a.basis(), std::move(m)};
}

/// t·d/dt: e_i ↦ i·e_i, a derivation of K[t]/(tⁿ) for every n.
template <ScalarField F>
GradedLinearMap<F> euler_derivation(const ColorHomAlgebra<F>& a) {
  Matrix<scalar_t<F>> m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = a.field().from_int(static_cast<long long>(i));
  return {a.basis(), std::move(m)};
}

/// e_i ↦ c^{w_i} e_i. With weights 0, 1, 2, ... on K[t]/(tⁿ) this is t ↦ c·t.
template <ScalarField F>
GradedLinearMap<F> scaling_morphism(const ColorHomAlgebra<F>& a, const scalar_t<F>& c,
                                    const std::vector<unsigned>& weights) {
  if (weights.size() != a.dim()) throw StructuralError("scaling_morphism: one weight per basis vector");
  Matrix<scalar_t<F>> m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = power(a.field(), c, weights[i]);
  return {a.basis(), std::move(m)};
}

inline std::vector<unsigned> polynomial_weights(std::size_t n) {
  std::vector<unsigned> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<unsigned>(i);
  return w;
}

/// Z_2-graded: e_0 even unit, e_1 odd with e_1·e_1 = 0, ε(1,1) = -1.
template <ScalarField F>
ColorHomAlgebra<F> super_commutative_line(const F& field) {
  const auto eps = Bicharacter<F>::super(field);
  const auto& g = eps.group();
  GradedBasis basis(g, {g.zero(), g.generator(0)});
  StructureTensor<scalar_t<F>> c(2);
  c(0, 0, 0) = field.one();
  c(0, 1, 1) = field.one();
  c(1, 0, 1) = field.one();
  return {basis, eps, std::move(c), GradedLinearMap<F>::identity(field, basis)};
}

/// Exterior algebra on two odd generators: basis 1, ξ1, ξ2, ξ1ξ2.
template <ScalarField F>
ColorHomAlgebra<F> grassmann_algebra(const F& field) {
  const auto eps = Bicharacter<F>::super(field);
  const auto& g = eps.group();
  const auto odd = g.generator(0);
  GradedBasis basis(g, {g.zero(), odd, odd, g.zero()});
  StructureTensor<scalar_t<F>> c(4);
  const auto one = field.one();
  for (std::size_t i = 0; i < 4; ++i) {
    c(0, i, i) = one;
    c(i, 0, i) = one;
  }
  c(1, 2, 3) = one;
  c(2, 1, 3) = -one;
  return {basis, eps, std::move(c), GradedLinearMap<F>::identity(field, basis)};
}

/// The degree-counting even derivation ξ_i ∂/∂ξ_i of the Grassmann algebra.
template <ScalarField F>
GradedLinearMap<F> grassmann_degree_derivation(const ColorHomAlgebra<F>& a) {
  return {a.basis(), Matrix<scalar_t<F>>::diagonal(a.field(), {0, 1, 1, 2})};
}

/// x ↦ (-1)^{|x|} x, an involutive automorphism of any Z_2-graded algebra.
template <ScalarField F>
GradedLinearMap<F> parity_automorphism(const ColorHomAlgebra<F>& a) {
  Matrix<scalar_t<F>> m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    m(i, i) = (a.basis().degree(i) == a.basis().group().zero()) ? a.field().one() : -a.field().one();
  return {a.basis(), std::move(m)};
}

/// A primitive cube root of unity in F_p; requires p ≡ 1 (mod 3).
inline ModInt cube_root_of_unity(const PrimeField& field) {
  const auto p = field.prime();
  if ((p - 1) % 3 != 0) throw StructuralError("cube roots of unity need p = 1 mod 3");
  for (long long g = 2; g < p; ++g) {
    const auto w = power(field, field.from_int(g), (p - 1) / 3);
    if (!(w == field.one())) return w;
  }
  throw std::logic_error("no primitive cube root of unity found");
}

/// Z_3×Z_3-graded truncated quantum plane over F_p: basis 1, x, y, xy with
/// deg x = (1,0), deg y = (0,1), x² = y² = 0 and y·x = ω⁻¹ x·y, where
/// ε((1,0),(0,1)) = ω. Color-commutative and associative.
inline ColorHomAlgebra<PrimeField> quantum_plane(const PrimeField& field) {
  const auto w = cube_root_of_unity(field);
  const GradeGroup g(0, {3, 3});
  Matrix<ModInt> table(2, 2, field.one());
  table(0, 1) = w;
  table(1, 0) = inverse(w);
  const Bicharacter<PrimeField> eps(field, g, table);
  GradedBasis basis(g, {g.zero(), g.generator(0), g.generator(1), g.element({1, 1})});
  StructureTensor<ModInt> c(4);
  for (std::size_t i = 0; i < 4; ++i) {
    c(0, i, i) = field.one();
    c(i, 0, i) = field.one();
  }
  c(1, 2, 3) = field.one();
  c(2, 1, 3) = inverse(w);
  return {basis, eps, std::move(c), GradedLinearMap<PrimeField>::identity(field, basis)};
}

/// Total-degree derivation of the quantum plane: x^a y^b ↦ (a+b) x^a y^b.
inline GradedLinearMap<PrimeField> quantum_plane_degree_derivation(const ColorHomAlgebra<PrimeField>& a) {
  return {a.basis(), Matrix<ModInt>::diagonal(a.field(), {0, 1, 1, 2})};
}

/// [e_0, e_1] = e_1, α = id.
template <ScalarField F>
ColorHomAlgebra<F> solvable_lie_2d(const F& field) {
  const auto eps = Bicharacter<F>::trivial(field, GradeGroup::trivial());
  const auto basis = GradedBasis::trivial(eps.group(), 2);
  StructureTensor<scalar_t<F>> c(2);
  c(0, 1, 1) = field.one();
  c(1, 0, 1) = -field.one();
  return {basis, eps, std::move(c), GradedLinearMap<F>::identity(field, basis)};
}

/// sl_2 on h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
template <ScalarField F>
ColorHomAlgebra<F> sl2(const F& field) {
  const auto eps = Bicharacter<F>::trivial(field, GradeGroup::trivial());
  const auto basis = GradedBasis::trivial(eps.group(), 3);
  StructureTensor<scalar_t<F>> c(3);
  const auto two = field.from_int(2);
  c(0, 1, 1) = two;
  c(1, 0, 1) = -two;
  c(0, 2, 2) = -two;
  c(2, 0, 2) = two;
  c(1, 2, 0) = field.one();
  c(2, 1, 0) = -field.one();
  return {basis, eps, std::move(c), GradedLinearMap<F>::identity(field, basis)};
}

/// [x, y] = z on x, y, z.
template <ScalarField F>
ColorHomAlgebra<F> heisenberg(const F& field) {
  const auto eps = Bicharacter<F>::trivial(field, GradeGroup::trivial());
  const auto basis = GradedBasis::trivial(eps.group(), 3);
  StructureTensor<scalar_t<F>> c(3);
  c(0, 1, 2) = field.one();
  c(1, 0, 2) = -field.one();
  return {basis, eps, std::move(c), GradedLinearMap<F>::identity(field, basis)};
}

/// B(e_i, e_j) = 1 iff i + j = n - 1.
template <ScalarField F>
BilinearFormStructure<F> antidiagonal_form(const ColorHomAlgebra<F>& a) {
  Matrix<scalar_t<F>> g(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) g(i, a.dim() - 1 - i) = a.field().one();
  return BilinearFormStructure<F>::plain(a.field(), a.basis(), std::move(g));
}

/// Hom-Novikov instances used by the theorem-level property tests.
template <ScalarField F>
std::vector<CatalogEntry<F>> hom_novikov_catalog(const F& field) {
  const std::string comm_example = "commutative Hom-associative color algebras are Hom-Novikov";
  std::vector<CatalogEntry<F>> out;
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back(detail::certified<F>({"truncated_polynomial(" + std::to_string(n) + ")", comm_example,
                                        truncated_polynomial(n, field),
                                        {"epsilon_commutative", "hom_associative", "hom_novikov", "multiplicative"}}));
  out.push_back(detail::certified<F>({"super_commutative_line", comm_example, super_commutative_line(field),
                                      {"epsilon_commutative", "hom_associative", "hom_novikov"}}));
  const auto grass = grassmann_algebra(field);
  out.push_back(detail::certified<F>(
      {"grassmann_algebra", comm_example, grass, {"epsilon_commutative", "hom_associative", "hom_novikov"}}));

  const auto p3 = truncated_polynomial(3, field);
  const auto euler3 = derivation_product(p3, euler_derivation(p3));
  out.push_back(detail::certified<F>(
      {"euler_novikov(3)", "derivation product of a commutative associative algebra", euler3, {"hom_novikov"}}));
  out.push_back(detail::certified<F>({"dt_novikov(2)", "x·d/dt(y) on K[t]/(t^2), verified directly",
                                      derivation_product(truncated_polynomial(2, field),
                                                         dt_derivation(truncated_polynomial(2, field)), Mode::unchecked),
                                      {"hom_novikov"}}));
  const auto scale2 = scaling_morphism(euler3, field.from_int(2), polynomial_weights(3));
  out.push_back(detail::certified<F>({"euler_novikov(3) twisted by t->2t", "Yau twist by a morphism",
                                      yau_twist(euler3, scale2),
                                      {"hom_novikov", "multiplicative", "regular"}}));
  const auto sign = scaling_morphism(p3, -field.one(), polynomial_weights(3));
  out.push_back(detail::certified<F>({"truncated_polynomial(3) twisted by t->-t", "Yau twist by a morphism",
                                      yau_twist(p3, sign),
                                      {"hom_novikov", "multiplicative", "regular", "involutive"}}));
  const auto grass_nov = derivation_product(grass, grassmann_degree_derivation(grass));
  out.push_back(detail::certified<F>(
      {"grassmann_novikov", "derivation product of a supercommutative algebra", grass_nov, {"hom_novikov"}}));
  out.push_back(detail::certified<F>({"grassmann_novikov twisted by parity", "Yau twist by a morphism",
                                      yau_twist(grass_nov, parity_automorphism(grass_nov)),
                                      {"hom_novikov", "multiplicative", "regular", "involutive"}}));
  return out;
}

/// Color instances over F_p for p ≡ 1 (mod 3).
inline std::vector<CatalogEntry<PrimeField>> color_catalog(const PrimeField& field) {
  std::vector<CatalogEntry<PrimeField>> out;
  const auto qp = quantum_plane(field);
  out.push_back(detail::certified<PrimeField>({"quantum_plane", "commutative Hom-associative color algebra", qp,
                                               {"epsilon_commutative", "hom_associative", "hom_novikov"}}));
  out.push_back(detail::certified<PrimeField>({"quantum_plane_novikov", "derivation product",
                                               derivation_product(qp, quantum_plane_degree_derivation(qp)),
                                               {"hom_novikov"}}));
  return out;
}

template <ScalarField F>
struct QuadraticEntry {
  std::string name;
  std::string provenance;
  ColorHomAlgebra<F> algebra;
  BilinearFormStructure<F> form;
  std::vector<std::string> claims;  // algebra checks, plus "quadratic_structure"
};

template <ScalarField F>
std::optional<std::pair<std::string, Verdict<scalar_t<F>>>> verify_claims(const QuadraticEntry<F>& e) {
  for (const auto& c : e.claims) {
    auto v = c == "quadratic_structure" ? check_quadratic_structure(e.algebra, e.form) : run_algebra_check(e.algebra, c);
    if (!v) return std::pair{c, v};
  }
  return std::nullopt;
}

namespace detail {

template <ScalarField F>
QuadraticEntry<F> certified(QuadraticEntry<F> e) {
#ifdef COLORHOM_SELF_CERTIFY
  if (auto bad = verify_claims(e))
    throw std::logic_error("quadratic instance " + e.name + " fails its claim " + bad->first + ": " +
                           describe(e.algebra.field(), bad->second));
#endif
  return e;
}

}  // namespace detail

/// B(x, y) = coefficient of ξ1ξ2 in x·y on the Grassmann algebra.
template <ScalarField F>
BilinearFormStructure<F> grassmann_top_form(const ColorHomAlgebra<F>& g) {
  Matrix<scalar_t<F>> m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = g.structure()(i, j, 3);
  return BilinearFormStructure<F>::plain(g.field(), g.basis(), std::move(m));
}

/// Quadratic and Hom-quadratic instances for the form-level theorems.
template <ScalarField F>
std::vector<QuadraticEntry<F>> quadratic_catalog(const F& field) {
  std::vector<QuadraticEntry<F>> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = truncated_polynomial(n, field);
    out.push_back(detail::certified<F>({"truncated_polynomial(" + std::to_string(n) + ") with antidiagonal form",
                                        "B(x, y) = coefficient of t^(n-1) in xy", p, antidiagonal_form(p),
                                        {"quadratic_structure", "hom_novikov", "regular", "involutive"}}));
  }
  const auto g = grassmann_algebra(field);
  out.push_back(detail::certified<F>({"grassmann_algebra with top form", "B(x, y) = top coefficient of xy", g,
                                      grassmann_top_form(g), {"quadratic_structure", "hom_novikov", "regular"}}));

  const auto p3 = truncated_polynomial(3, field);
  const auto sign = scaling_morphism(p3, -field.one(), polynomial_weights(3));
  const auto tw = yau_twist(p3, sign);
  auto hq = antidiagonal_form(p3);
  hq.companion = tw.alpha();
  out.push_back(detail::certified<F>({"truncated_polynomial(3) twisted by t->-t, companion alpha",
                                      "Yau twist of a quadratic algebra by a symmetric involution", tw, hq,
                                      {"quadratic_structure", "hom_novikov", "regular", "involutive"}}));

  const auto z = zero_algebra(field, 2);
  const auto zi = z.with(z.structure(), GradedLinearMap<F>(z.basis(), Matrix<scalar_t<F>>::diagonal(field, {1, -1})));
  BilinearFormStructure<F> zf{Matrix<scalar_t<F>>::identity(field, 2), zi.alpha()};
  out.push_back(detail::certified<F>({"zero product with alpha = diag(1,-1), identity form",
                                      "every clause reduces to alpha being B-symmetric", zi, zf,
                                      {"quadratic_structure", "hom_novikov", "regular", "involutive"}}));
  return out;
}

// ---------------------------------------------------------------------------
// Map search

enum class MapPredicate {
  derivation,
  weak_morphism,
  morphism,
  averaging,
  centroid,
  rota_baxter,
  symmetric_automorphism,
  f_conditions,
};

inline MapPredicate parse_map_predicate(std::string_view raw) {
  const auto name = normalize_check_name(raw);
  if (name == "derivation") return MapPredicate::derivation;
  if (name == "weak_morphism") return MapPredicate::weak_morphism;
  if (name == "morphism") return MapPredicate::morphism;
  if (name == "averaging") return MapPredicate::averaging;
  if (name == "centroid") return MapPredicate::centroid;
  if (name == "rota_baxter") return MapPredicate::rota_baxter;
  if (name == "symmetric_automorphism") return MapPredicate::symmetric_automorphism;
  if (name == "f_conditions") return MapPredicate::f_conditions;
  throw std::invalid_argument("unknown predicate '" + std::string(raw) + "'");
}

template <ScalarField F>
struct MapSearch {
  MapPredicate predicate = MapPredicate::weak_morphism;
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
  std::vector<long long> entries = {-1, 0, 1, 2};
  bool diagonal_only = false;
  std::optional<GroupElement> degree;            // derivations; defaults to 0
  Side side = Side::both;                        // averaging and centroid
  std::optional<scalar_t<F>> lambda;             // Rota-Baxter weight; defaults to 0
  std::optional<BilinearFormStructure<F>> form;  // symmetric automorphisms
};

/// Candidates are matrices homogeneous of the requested degree whose free
/// entries come from `entries`. When the space has at most `budget` elements
/// it is enumerated completely; otherwise `budget` candidates are drawn with a
/// seeded generator. Hits are deduplicated and returned in the enumeration
/// order of their entry indices.
template <ScalarField F>
std::vector<GradedLinearMap<F>> search_maps(const ColorHomAlgebra<F>& a, const MapSearch<F>& req) {
  const auto& field = a.field();
  const auto& g = a.basis().group();
  const auto degree = (req.predicate == MapPredicate::derivation && req.degree) ? *req.degree : g.zero();
  const auto n = a.dim();
  if (req.entries.empty()) throw std::invalid_argument("search_maps: empty entry set");
  if (req.predicate == MapPredicate::symmetric_automorphism && !req.form)
    throw std::invalid_argument("search_maps: symmetric_automorphism needs a bilinear form");

  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, col)
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row)
      if (a.basis().degree(row) == g.add(a.basis().degree(col), degree) && (!req.diagonal_only || row == col))
        slots.emplace_back(row, col);

  const auto lambda = req.lambda.value_or(field.zero());
  auto accept = [&](const GradedLinearMap<F>& m) {
    switch (req.predicate) {
      case MapPredicate::derivation: return is_derivation(a, m, degree).passes();
      case MapPredicate::weak_morphism: return is_weak_morphism(a, a, m).passes();
      case MapPredicate::morphism: return is_morphism(a, a, m).passes();
      case MapPredicate::averaging: return is_averaging(a, m, req.side).passes();
      case MapPredicate::centroid: return is_centroid(a, m, req.side).passes();
      case MapPredicate::rota_baxter: return is_rota_baxter(a, m, lambda).passes();
      case MapPredicate::symmetric_automorphism: return is_symmetric_automorphism(a, *req.form, m).passes();
      case MapPredicate::f_conditions:
        return map_commutes_with_alpha(a, m) && check_f_conditions(a, m).passes();
    }
    return false;
  };
  auto build = [&](const std::vector<std::size_t>& digits) {
    Matrix<scalar_t<F>> mat(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      mat(slots[s].first, slots[s].second) = field.from_int(req.entries[digits[s]]);
    return GradedLinearMap<F>(a.basis(), std::move(mat), degree);
  };

  const std::size_t radix = req.entries.size();
  // Space size, saturating above the budget.
  std::size_t space = 1;
  bool exhaustive = true;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (space > req.budget / radix) {
      exhaustive = false;
      break;
    }
    space *= radix;
  }
  if (exhaustive && space > req.budget) exhaustive = false;

  std::set<std::vector<std::size_t>> hits;
  std::vector<std::size_t> digits(slots.size(), 0);
  if (exhaustive) {
    for (std::size_t idx = 0; idx < space; ++idx) {
      std::size_t rem = idx;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        digits[s] = rem % radix;
        rem /= radix;
      }
      if (accept(build(digits))) hits.insert(digits);
    }
  } else {
    std::mt19937_64 rng(req.seed);
    std::uniform_int_distribution<std::size_t> pick(0, radix - 1);
    for (std::size_t t = 0; t < req.budget; ++t) {
      for (auto& d : digits) d = pick(rng);
      if (!hits.contains(digits) && accept(build(digits))) hits.insert(digits);
    }
  }
  std::vector<GradedLinearMap<F>> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back(build(h));
  return out;
}

}  // namespace colorhom
