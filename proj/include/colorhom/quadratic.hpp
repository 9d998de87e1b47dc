#pragma once

// Hom-quadratic structures: a bilinear form B (Gram matrix) with a companion
// map β, validated clause by clause:
//   (a) β even, (b) B ε-symmetric, (c) B nondegenerate,
//   (d) B(x·y, β(z)) = B(β(x), y·z), (e) α is B-symmetric.
// B is also required to be even, B(A_a, A_b) = 0 unless a + b = 0, unless the
// check runs in permissive mode.

#include "colorhom/checks.hpp"
#include "colorhom/constructions.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace colorhom {

template <ScalarField F>
struct BilinearFormStructure {
  Matrix<scalar_t<F>> gram;      // gram(i, j) = B(e_i, e_j)
  GradedLinearMap<F> companion;  // identity for plain quadratic structures

  static BilinearFormStructure plain(const F& field, const GradedBasis& basis, Matrix<scalar_t<F>> gram) {
    return {std::move(gram), GradedLinearMap<F>::identity(field, basis)};
  }

  friend bool operator==(const BilinearFormStructure&, const BilinearFormStructure&) = default;
};

template <class S>
S bilinear(const Matrix<S>& gram, const Vector<S>& x, const Vector<S>& y) {
  S acc{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) acc += x[i] * gram(i, j) * y[j];
  }
  return acc;
}

/// Gram matrix of B_φ(x, y) = B(φ(x), y), i.e. φᵀ·G.
template <ScalarField F>
Matrix<scalar_t<F>> twisted_gram(const Matrix<scalar_t<F>>& gram, const GradedLinearMap<F>& phi) {
  return phi.matrix().transpose() * gram;
}

enum class FormMode { strict, permissive };

namespace detail {

template <ScalarField F>
void require_form_shape(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form) {
  if (form.gram.rows() != a.dim() || form.gram.cols() != a.dim())
    throw StructuralError("Gram matrix does not match the algebra dimension");
  require_same_basis(a, form.companion, "companion map");
}

template <ScalarField F>
scalar_t<F> invariance_lhs(const BasisView<F>& v, const BilinearFormStructure<F>& form, std::size_t i, std::size_t j,
                           std::size_t k) {
  return bilinear(form.gram, v.e(i, j), form.companion.image(k));
}
template <ScalarField F>
scalar_t<F> invariance_rhs(const BasisView<F>& v, const BilinearFormStructure<F>& form, std::size_t i, std::size_t j,
                           std::size_t k) {
  return bilinear(form.gram, form.companion.image(i), v.e(j, k));
}

}  // namespace detail

/// Determinant and elimination rank of the Gram matrix, computed by
/// independent routes; they must agree on nondegeneracy.
template <ScalarField F>
bool is_nondegenerate(const F& field, const Matrix<scalar_t<F>>& gram) {
  const bool by_det = !is_zero(determinant(field, gram));
  const bool by_rank = rank(field, gram) == gram.rows();
  if (by_det != by_rank) throw std::logic_error("determinant and rank disagree on nondegeneracy");
  return by_det;
}

template <ScalarField F>
Verdict<scalar_t<F>> check_quadratic_structure(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                               FormMode mode = FormMode::strict) {
  using V = Verdict<scalar_t<F>>;
  detail::require_form_shape(a, form);
  const auto n = a.dim();
  const auto& g = form.gram;
  const auto& grp = a.basis().group();
  if (mode == FormMode::strict)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(g(i, j)) && !(grp.add(a.basis().degree(i), a.basis().degree(j)) == grp.zero()))
          return V::fail("form-even", {i, j}, {g(i, j)}, {a.field().zero()});
  if (auto ev = detail::map_degree_verdict(a, form.companion, grp.zero(), "a: companion-even"); !ev) return ev;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(g(i, j) == a.eps(i, j) * g(j, i)))
        return V::fail("b: epsilon-symmetry", {i, j}, {g(i, j)}, {a.eps(i, j) * g(j, i)});
  if (!is_nondegenerate(a.field(), g)) return V::fail("c: nondegenerate", {}, {determinant(a.field(), g)}, {});
  detail::BasisView<F> v(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = detail::invariance_lhs(v, form, i, j, k);
        auto rhs = detail::invariance_rhs(v, form, i, j, k);
        if (!(lhs == rhs)) return V::fail("d: invariance", {i, j, k}, {lhs}, {rhs});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = bilinear(g, a.alpha().image(i), a.basis_vector(j));
      auto rhs = bilinear(g, a.basis_vector(i), a.alpha().image(j));
      if (!(lhs == rhs)) return V::fail("e: alpha-B-symmetric", {i, j}, {lhs}, {rhs});
    }
  return V::pass();
}

/// Every basis triple at which the invariance clause fails, in lexicographic order.
template <ScalarField F>
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> invariance_failures(
    const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form) {
  detail::require_form_shape(a, form);
  detail::BasisView<F> v(a);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!(detail::invariance_lhs(v, form, i, j, k) == detail::invariance_rhs(v, form, i, j, k)))
          out.emplace_back(i, j, k);
  return out;
}

/// φ ∈ Aut_s(A, B): an invertible morphism with B(φ(x), y) = B(x, φ(y)).
template <ScalarField F>
Verdict<scalar_t<F>> is_symmetric_automorphism(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                               const GradedLinearMap<F>& phi) {
  using V = Verdict<scalar_t<F>>;
  detail::require_form_shape(a, form);
  detail::require_same_basis(a, phi, "phi");
  if (auto ev = detail::map_degree_verdict(a, phi, a.basis().group().zero(), "even"); !ev) return ev;
  if (!try_inverse(a.field(), phi.matrix())) return V::fail("invertible", {}, {determinant(a.field(), phi.matrix())}, {});
  if (auto m = is_morphism(a, a, phi); !m) return m;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto lhs = bilinear(form.gram, phi.image(i), a.basis_vector(j));
      auto rhs = bilinear(form.gram, a.basis_vector(i), phi.image(j));
      if (!(lhs == rhs)) return V::fail("B-symmetric", {i, j}, {lhs}, {rhs});
    }
  return V::pass();
}

/// Quadratic Hom-Lie structure: the product is a Hom-Lie bracket and the form
/// passes every quadratic clause with respect to it.
template <ScalarField F>
Verdict<scalar_t<F>> check_quadratic_hom_lie(const ColorHomAlgebra<F>& lie, const BilinearFormStructure<F>& form,
                                             FormMode mode = FormMode::strict) {
  if (auto v = check_hom_lie(lie); !v) return v;
  return check_quadratic_structure(lie, form, mode);
}

template <ScalarField F>
struct QuadraticAlgebra {
  ColorHomAlgebra<F> algebra;
  BilinearFormStructure<F> form;
};

namespace detail {

template <ScalarField F>
void require_companion(Mode mode, const GradedLinearMap<F>& companion, const GradedLinearMap<F>& expected,
                       const char* what) {
  if (mode == Mode::strict && !(companion.matrix() == expected.matrix()))
    throw PreconditionError(std::string("companion is ") + what, "companion map differs");
}

}  // namespace detail

/// (A, β∘·, ε, β∘α, B_β) with B_β(x, y) = B(β(x), y), for β ∈ Aut_s(A, B) on a
/// quadratic Hom-Novikov algebra.
template <ScalarField F>
QuadraticAlgebra<F> quadratic_yau_twist(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                        const GradedLinearMap<F>& beta, Mode mode = Mode::strict) {
  detail::require_form_shape(a, form);
  const auto id = GradedLinearMap<F>::identity(a.field(), a.basis());
  detail::require_companion(mode, form.companion, id, "the identity");
  if (mode == Mode::strict) {
    detail::require(mode, "check_quadratic_structure", a.field(), check_quadratic_structure(a, form));
    detail::require(mode, "is_symmetric_automorphism", a.field(), is_symmetric_automorphism(a, form, beta));
  }
  auto twisted = yau_twist(a, beta, mode);
  return {std::move(twisted), {twisted_gram(form.gram, beta), id}};
}

/// B_{αⁿ} on A^n = (A, αⁿ∘·, ε, α^{n+1}); αⁿ must be a symmetric automorphism.
template <ScalarField F>
QuadraticAlgebra<F> quadratic_power_twist(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                          unsigned n, Mode mode = Mode::strict) {
  return quadratic_yau_twist(a, form, map_power(a.field(), a.alpha(), n), mode);
}

/// The commutator algebra with the same plain quadratic form.
template <ScalarField F>
QuadraticAlgebra<F> quadratic_commutator(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                         Mode mode = Mode::strict) {
  detail::require_form_shape(a, form);
  const auto id = GradedLinearMap<F>::identity(a.field(), a.basis());
  detail::require_companion(mode, form.companion, id, "the identity");
  if (mode == Mode::strict)
    detail::require(mode, "check_quadratic_structure", a.field(), check_quadratic_structure(a, form));
  return {commutator_algebra(a), form};
}

/// For a Hom-quadratic regular Hom-Novikov algebra with companion α: the
/// commutator algebra with B_α(x, y) = B(α(x), y) and companion α.
template <ScalarField F>
QuadraticAlgebra<F> regular_quadratic_commutator(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                                 Mode mode = Mode::strict) {
  detail::require_form_shape(a, form);
  detail::require_companion(mode, form.companion, a.alpha(), "alpha");
  if (mode == Mode::strict) {
    detail::require(mode, "check_quadratic_structure", a.field(), check_quadratic_structure(a, form));
    detail::require(mode, "check_regular", a.field(), check_regular(a));
  }
  return {commutator_algebra(a), {twisted_gram(form.gram, a.alpha()), a.alpha()}};
}

/// For a Hom-quadratic involutive Hom-Novikov algebra with companion α:
/// (A, α∘·, ε, B) with identity twisting map and plain form B.
template <ScalarField F>
QuadraticAlgebra<F> quadratic_untwist_involutive(const ColorHomAlgebra<F>& a, const BilinearFormStructure<F>& form,
                                                 Mode mode = Mode::strict) {
  detail::require_form_shape(a, form);
  detail::require_companion(mode, form.companion, a.alpha(), "alpha");
  if (mode == Mode::strict)
    detail::require(mode, "check_quadratic_structure", a.field(), check_quadratic_structure(a, form));
  auto plain = untwist_involutive(a, mode);
  auto id = GradedLinearMap<F>::identity(a.field(), a.basis());
  return {std::move(plain), {form.gram, std::move(id)}};
}

}  // namespace colorhom
