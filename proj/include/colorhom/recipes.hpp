#pragma once

// Catalog instances addressable by name, materialized as documents that carry
// the maps and forms used with them.

#include "colorhom/catalog.hpp"
#include "colorhom/document.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace colorhom {

inline constexpr std::array<std::string_view, 13> kRecipes = {
    "truncated_polynomial", "dt_novikov",   "euler_novikov",     "hom_quadratic_polynomial", "super_commutative_line",
    "grassmann_algebra",    "grassmann_novikov", "quantum_plane", "solvable_lie_2d",          "sl2",
    "heisenberg",           "zero_algebra", "abelian_lie"};

struct RecipeArgs {
  std::size_t n = 3;
};

/// Throws std::invalid_argument for unknown names and StructuralError for
/// parameters the recipe cannot take.
template <ScalarField F>
Document<F> materialize_recipe(std::string_view name, const F& field, RecipeArgs args = {}) {
  auto doc_of = [&](ColorHomAlgebra<F> a) {
    auto d = plain_document(std::move(a));
    d.provenance = Json{{"recipe", std::string(name)}, {"n", args.n}};
    return d;
  };
  auto polynomial_maps = [&](Document<F>& d, const ColorHomAlgebra<F>& base) {
    const auto w = polynomial_weights(base.dim());
    d.maps.emplace("scale2", scaling_morphism(base, field.from_int(2), w));
    d.maps.emplace("sign", scaling_morphism(base, -field.one(), w));
    d.maps.emplace("twice", GradedLinearMap<F>::scalar(field, base.basis(), field.from_int(2)));
  };

  if (name == "truncated_polynomial") {
    const auto p = truncated_polynomial(args.n, field);
    auto d = doc_of(p);
    d.maps.emplace("dt", dt_derivation(p));
    d.maps.emplace("euler", euler_derivation(p));
    polynomial_maps(d, p);
    d.forms.emplace("antidiagonal", NamedForm<F>{antidiagonal_form(p).gram, ""});
    d.forms.emplace("identity", NamedForm<F>{Matrix<scalar_t<F>>::identity(field, p.dim()), ""});
    return d;
  }
  if (name == "dt_novikov") {
    const auto p = truncated_polynomial(args.n, field);
    return doc_of(derivation_product(p, dt_derivation(p), Mode::unchecked));
  }
  if (name == "euler_novikov") {
    const auto p = truncated_polynomial(args.n, field);
    auto d = doc_of(derivation_product(p, euler_derivation(p)));
    polynomial_maps(d, p);
    return d;
  }
  if (name == "hom_quadratic_polynomial") {
    const auto p = truncated_polynomial(args.n, field);
    const auto sign = scaling_morphism(p, -field.one(), polynomial_weights(p.dim()));
    auto d = doc_of(yau_twist(p, sign));
    d.forms.emplace("antidiagonal", NamedForm<F>{antidiagonal_form(p).gram, "alpha"});
    return d;
  }
  if (name == "super_commutative_line") {
    auto a = super_commutative_line(field);
    auto d = doc_of(a);
    d.maps.emplace("parity", parity_automorphism(a));
    return d;
  }
  if (name == "grassmann_algebra") {
    auto a = grassmann_algebra(field);
    auto d = doc_of(a);
    d.maps.emplace("degree", grassmann_degree_derivation(a));
    d.maps.emplace("parity", parity_automorphism(a));
    return d;
  }
  if (name == "grassmann_novikov") {
    const auto g = grassmann_algebra(field);
    auto d = doc_of(derivation_product(g, grassmann_degree_derivation(g)));
    d.maps.emplace("parity", parity_automorphism(g));
    return d;
  }
  if (name == "quantum_plane") {
    if constexpr (std::is_same_v<F, PrimeField>) {
      auto a = quantum_plane(field);
      auto d = doc_of(a);
      d.maps.emplace("degree", quantum_plane_degree_derivation(a));
      return d;
    } else {
      throw StructuralError("quantum_plane needs a prime field with p = 1 mod 3");
    }
  }
  if (name == "solvable_lie_2d") {
    auto a = solvable_lie_2d(field);
    auto d = doc_of(a);
    d.maps.emplace("first", GradedLinearMap<F>(a.basis(), Matrix<scalar_t<F>>::diagonal(field, {1, 0})));
    return d;
  }
  if (name == "sl2") return doc_of(sl2(field));
  if (name == "heisenberg") return doc_of(heisenberg(field));
  if (name == "zero_algebra") return doc_of(zero_algebra(field, args.n));
  if (name == "abelian_lie") {
    auto d = doc_of(zero_algebra(field, args.n));
    d.maps.emplace("scale2", GradedLinearMap<F>::scalar(field, d.algebra.basis(), field.from_int(2)));
    return d;
  }
  throw std::invalid_argument("unknown recipe '" + std::string(name) + "'");
}

}  // namespace colorhom
