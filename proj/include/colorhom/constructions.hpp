#pragma once

// Constructions producing new color Hom-algebras from old ones. In strict mode
// (the default) every hypothesis is checked first and a PreconditionError names
// the one that failed; Mode::unchecked applies the bare formula.

#include "colorhom/checks.hpp"
#include "colorhom/errors.hpp"
#include "colorhom/graded.hpp"

#include <string>

namespace colorhom {

enum class Mode { strict, unchecked };

namespace detail {

template <ScalarField F>
void require(Mode mode, const std::string& hypothesis, const F& field, const Verdict<scalar_t<F>>& v) {
  if (mode == Mode::strict && !v.passes()) throw PreconditionError(hypothesis, describe(field, v));
}

template <ScalarField F>
void require_even(Mode mode, const std::string& what, const GradedLinearMap<F>& m) {
  if (mode == Mode::strict && !m.is_even())
    throw PreconditionError(what + " is even", "map has degree " + to_string(m.degree()));
}

template <ScalarField F>
void require_commutes(Mode mode, const std::string& what, const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& m) {
  require_same_basis(a, m, what.c_str());
  if (mode == Mode::strict && !map_commutes_with_alpha(a, m))
    throw PreconditionError(what + " commutes with alpha", "alpha∘" + what + " != " + what + "∘alpha");
}

template <ScalarField F>
void require_compatible(const ColorHomAlgebra<F>& a, const ColorHomAlgebra<F>& b, const char* what) {
  if (!(a.field() == b.field())) throw StructuralError(std::string(what) + ": algebras over different fields");
  if (!(a.bicharacter() == b.bicharacter()))
    throw StructuralError(std::string(what) + ": algebras carry different grading groups or bicharacters");
}

}  // namespace detail

/// A_β = (A, β∘·, ε, β∘α) for a weak morphism β of a Hom-Novikov algebra.
template <ScalarField F>
ColorHomAlgebra<F> yau_twist(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& beta, Mode mode = Mode::strict) {
  detail::require_same_basis(a, beta, "beta");
  detail::require_even(mode, "beta", beta);
  if (mode == Mode::strict) {
    detail::require(mode, "is_weak_morphism", a.field(), is_weak_morphism(a, a, beta));
    detail::require(mode, "check_hom_novikov", a.field(), check_hom_novikov(a));
  }
  return a.with(compose_product(beta, a.structure()), compose_maps(beta, a.alpha()));
}

/// A^n = (A, αⁿ∘·, ε, α^{n+1}) for a multiplicative Hom-Novikov algebra.
template <ScalarField F>
ColorHomAlgebra<F> power_twist(const ColorHomAlgebra<F>& a, unsigned n, Mode mode = Mode::strict) {
  if (mode == Mode::strict) {
    detail::require(mode, "check_multiplicative", a.field(), check_multiplicative(a));
    detail::require(mode, "check_hom_novikov", a.field(), check_hom_novikov(a));
  }
  const auto an = map_power(a.field(), a.alpha(), n);
  return a.with(compose_product(an, a.structure()), compose_maps(an, a.alpha()));
}

/// (A, β∘·, ε, α) for β in the centroid; the twisting map is unchanged.
template <ScalarField F>
ColorHomAlgebra<F> centroid_twist(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& beta,
                                  Mode mode = Mode::strict) {
  detail::require_same_basis(a, beta, "beta");
  if (mode == Mode::strict) {
    detail::require(mode, "is_centroid", a.field(), is_centroid(a, beta, Side::both));
    detail::require(mode, "check_hom_novikov", a.field(), check_hom_novikov(a));
  }
  return a.with(compose_product(beta, a.structure()), a.alpha());
}

/// x ∗ y = ξ·(x·y) with map α², for ξ of degree 0 in a commutative Hom-associative algebra.
template <ScalarField F>
ColorHomAlgebra<F> xi_square_twist(const ColorHomAlgebra<F>& a, const Vector<scalar_t<F>>& xi,
                                   Mode mode = Mode::strict) {
  if (xi.size() != a.dim()) throw StructuralError("xi has the wrong length");
  if (mode == Mode::strict) {
    if (!is_homogeneous_of(a.basis(), xi, a.basis().group().zero()))
      throw PreconditionError("xi has degree 0", "xi = " + format_vector(a.field(), xi));
    detail::require(mode, "check_epsilon_commutative", a.field(), check_epsilon_commutative(a));
    detail::require(mode, "check_hom_associative", a.field(), check_hom_associative(a));
  }
  const auto n = a.dim();
  StructureTensor<scalar_t<F>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, eval_product(a, xi, a.structure().product(i, j)));
  return a.with(std::move(out), compose_maps(a.alpha(), a.alpha()));
}

/// [x, y] = x·y - ε(x, y) y·x with the same α. Total: the Hom-Lie conclusion
/// holds when A is Hom-Novikov.
template <ScalarField F>
ColorHomAlgebra<F> commutator_algebra(const ColorHomAlgebra<F>& a) {
  return a.with(commutator_structure(a), a.alpha());
}

namespace detail {

/// x ∗ y = x·∂(y).
template <ScalarField F>
StructureTensor<scalar_t<F>> right_operator_product(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& d) {
  const auto n = a.dim();
  StructureTensor<scalar_t<F>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, eval_product(a, a.basis_vector(i), d.image(j)));
  return out;
}

}  // namespace detail

/// x ∗ y = x·∂(y) for an averaging operator ∂ on a commutative Hom-Novikov algebra.
template <ScalarField F>
ColorHomAlgebra<F> averaging_product(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& d,
                                     Mode mode = Mode::strict) {
  detail::require_same_basis(a, d, "averaging operator");
  if (mode == Mode::strict) {
    detail::require(mode, "check_epsilon_commutative", a.field(), check_epsilon_commutative(a));
    detail::require(mode, "check_hom_novikov", a.field(), check_hom_novikov(a));
    detail::require(mode, "is_averaging", a.field(), is_averaging(a, d, Side::both));
  }
  return a.with(detail::right_operator_product(a, d), a.alpha());
}

/// x ∗ y = x·∂(y) for an even derivation ∂ commuting with α on a commutative
/// Hom-associative algebra.
template <ScalarField F>
ColorHomAlgebra<F> derivation_product(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& d,
                                      Mode mode = Mode::strict) {
  detail::require_same_basis(a, d, "derivation");
  detail::require_even(mode, "derivation", d);
  if (mode == Mode::strict) {
    detail::require(mode, "check_epsilon_commutative", a.field(), check_epsilon_commutative(a));
    detail::require(mode, "check_hom_associative", a.field(), check_hom_associative(a));
    detail::require(mode, "is_derivation", a.field(), is_derivation(a, d, a.basis().group().zero()));
    detail::require_commutes(mode, "derivation", a, d);
  }
  return a.with(detail::right_operator_product(a, d), a.alpha());
}

/// x ∗ y = α(x·∂(y)) with twisting map α, where (A, ·) is commutative
/// associative (its own twisting map is ignored), α an algebra morphism and ∂
/// a derivation commuting with α.
template <ScalarField F>
ColorHomAlgebra<F> composed_derivation_product(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& alpha,
                                               const GradedLinearMap<F>& d, Mode mode = Mode::strict) {
  detail::require_same_basis(a, alpha, "alpha");
  detail::require_same_basis(a, d, "derivation");
  const auto plain = a.with(a.structure(), GradedLinearMap<F>::identity(a.field(), a.basis()));
  detail::require_even(mode, "alpha", alpha);
  detail::require_even(mode, "derivation", d);
  if (mode == Mode::strict) {
    detail::require(mode, "check_epsilon_commutative", a.field(), check_epsilon_commutative(plain));
    detail::require(mode, "check_hom_associative", a.field(), check_hom_associative(plain));
    detail::require(mode, "is_morphism(alpha)", a.field(), is_morphism(plain, plain, alpha));
    detail::require(mode, "is_derivation", a.field(), is_derivation(plain, d, a.basis().group().zero()));
    if (!(alpha.matrix() * d.matrix() == d.matrix() * alpha.matrix()))
      throw PreconditionError("derivation commutes with alpha", "alpha∘d != d∘alpha");
  }
  return a.with(compose_product(alpha, detail::right_operator_product(plain, d)), alpha);
}

/// x ∗ y = [f(x), y] on a Hom-Lie color algebra L, for f even and commuting
/// with α. The result is Hom-Novikov exactly when check_f_conditions(L, f) passes.
template <ScalarField F>
ColorHomAlgebra<F> bracket_operator_product(const ColorHomAlgebra<F>& lie, const GradedLinearMap<F>& f,
                                            Mode mode = Mode::strict) {
  detail::require_same_basis(lie, f, "f");
  detail::require_even(mode, "f", f);
  if (mode == Mode::strict) {
    detail::require(mode, "check_hom_lie", lie.field(), check_hom_lie(lie));
    detail::require_commutes(mode, "f", lie, f);
  }
  const auto n = lie.dim();
  StructureTensor<scalar_t<F>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, eval_product(lie, f.image(i), lie.basis_vector(j)));
  return lie.with(std::move(out), lie.alpha());
}

/// Block-diagonal sum of two algebras over the same (G, ε); summand degrees are kept.
template <ScalarField F>
ColorHomAlgebra<F> direct_sum(const ColorHomAlgebra<F>& a1, const ColorHomAlgebra<F>& a2, Mode mode = Mode::strict) {
  detail::require_compatible(a1, a2, "direct_sum");
  if (mode == Mode::strict) {
    detail::require(mode, "check_hom_novikov(first)", a1.field(), check_hom_novikov(a1));
    detail::require(mode, "check_hom_novikov(second)", a2.field(), check_hom_novikov(a2));
  }
  const auto n1 = a1.dim(), n2 = a2.dim(), n = n1 + n2;
  auto degrees = a1.basis().degrees();
  degrees.insert(degrees.end(), a2.basis().degrees().begin(), a2.basis().degrees().end());
  GradedBasis basis(a1.basis().group(), std::move(degrees));
  StructureTensor<scalar_t<F>> c(n);
  Matrix<scalar_t<F>> alpha(n, n);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) c(i, j, k) = a1.structure()(i, j, k);
    for (std::size_t k = 0; k < n1; ++k) alpha(k, i) = a1.alpha().matrix()(k, i);
  }
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k) c(n1 + i, n1 + j, n1 + k) = a2.structure()(i, j, k);
    for (std::size_t k = 0; k < n2; ++k) alpha(n1 + k, n1 + i) = a2.alpha().matrix()(k, i);
  }
  return {basis, a1.bicharacter(), std::move(c), GradedLinearMap<F>(basis, std::move(alpha))};
}

/// S ⊗ A with (x⊗a)⋆(y⊗b) = ε(a, y)(x∗y)⊗(a·b) and α_S⊗α_A, for S Hom-Novikov and
/// A commutative Hom-associative. Basis element (i, p) sits at index i·dim(A) + p.
template <ScalarField F>
ColorHomAlgebra<F> tensor_product(const ColorHomAlgebra<F>& s, const ColorHomAlgebra<F>& a, Mode mode = Mode::strict) {
  detail::require_compatible(s, a, "tensor_product");
  if (mode == Mode::strict) {
    detail::require(mode, "check_hom_novikov(S)", s.field(), check_hom_novikov(s));
    detail::require(mode, "check_epsilon_commutative(A)", a.field(), check_epsilon_commutative(a));
    detail::require(mode, "check_hom_associative(A)", a.field(), check_hom_associative(a));
  }
  const auto ns = s.dim(), na = a.dim(), n = ns * na;
  const auto& g = s.basis().group();
  std::vector<GroupElement> degrees;
  degrees.reserve(n);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t p = 0; p < na; ++p) degrees.push_back(g.add(s.basis().degree(i), a.basis().degree(p)));
  GradedBasis basis(g, std::move(degrees));
  StructureTensor<scalar_t<F>> c(n);
  const auto& cs = s.structure();
  const auto& ca = a.structure();
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t j = 0; j < ns; ++j) {
        const auto sign = s.eps(a.basis().degree(p), s.basis().degree(j));
        for (std::size_t q = 0; q < na; ++q)
          for (std::size_t k = 0; k < ns; ++k) {
            if (is_zero(cs(i, j, k))) continue;
            for (std::size_t r = 0; r < na; ++r)
              if (!is_zero(ca(p, q, r))) c(i * na + p, j * na + q, k * na + r) = sign * cs(i, j, k) * ca(p, q, r);
          }
      }
  Matrix<scalar_t<F>> alpha(n, n);
  const auto& as = s.alpha().matrix();
  const auto& aa = a.alpha().matrix();
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t k = 0; k < ns; ++k)
        for (std::size_t r = 0; r < na; ++r) alpha(k * na + r, i * na + p) = as(k, i) * aa(r, p);
  return {basis, s.bicharacter(), std::move(c), GradedLinearMap<F>(basis, std::move(alpha))};
}

/// (A, α∘·, ε) with identity twisting map, for an involutive multiplicative Hom-Novikov A.
template <ScalarField F>
ColorHomAlgebra<F> untwist_involutive(const ColorHomAlgebra<F>& a, Mode mode = Mode::strict) {
  if (mode == Mode::strict) {
    detail::require(mode, "check_involutive", a.field(), check_involutive(a));
    detail::require(mode, "check_multiplicative", a.field(), check_multiplicative(a));
    detail::require(mode, "check_hom_novikov", a.field(), check_hom_novikov(a));
  }
  return a.with(compose_product(a.alpha(), a.structure()), GradedLinearMap<F>::identity(a.field(), a.basis()));
}

/// (A, α⁻¹∘[-,-], ε) with identity twisting map, for a regular Hom-Novikov A.
template <ScalarField F>
ColorHomAlgebra<F> regular_lie_untwist(const ColorHomAlgebra<F>& a, Mode mode = Mode::strict) {
  if (mode == Mode::strict) {
    detail::require(mode, "check_regular", a.field(), check_regular(a));
    detail::require(mode, "check_hom_novikov", a.field(), check_hom_novikov(a));
  }
  const auto inv = invert_map(a.field(), a.alpha());
  return a.with(compose_product(inv, commutator_structure(a)), GradedLinearMap<F>::identity(a.field(), a.basis()));
}

}  // namespace colorhom
