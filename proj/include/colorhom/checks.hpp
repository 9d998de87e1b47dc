#pragma once

// Exact predicates for every identity a color Hom-algebra may satisfy. Each
// check runs over basis tuples in lexicographic order and reports the first
// failure. By multilinearity (with ε evaluated on basis degrees) this is
// equivalent to checking all homogeneous elements.

#include "colorhom/errors.hpp"
#include "colorhom/graded.hpp"
#include "colorhom/verdict.hpp"

#include <string>
#include <vector>

namespace colorhom {

enum class Side { left, right, both };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::both: return "both";
  }
  return "?";
}

/// b[i][j][k] = c[i][j][k] - ε(i,j) c[j][i][k].
template <ScalarField F>
StructureTensor<scalar_t<F>> commutator_structure(const ColorHomAlgebra<F>& a) {
  const auto n = a.dim();
  const auto& c = a.structure();
  StructureTensor<scalar_t<F>> b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b(i, j, k) = c(i, j, k) - a.eps(i, j) * c(j, i, k);
  return b;
}

namespace detail {

/// Cached basis products and α-images for the tuple loops.
template <ScalarField F>
class BasisView {
 public:
  using S = scalar_t<F>;
  using V = Vector<S>;

  explicit BasisView(const ColorHomAlgebra<F>& a) : a_(a), n_(a.dim()), prod_(n_ * n_), alpha_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      alpha_[i] = a.alpha().image(i);
      for (std::size_t j = 0; j < n_; ++j) prod_[i * n_ + j] = a.structure().product(i, j);
    }
  }

  std::size_t dim() const { return n_; }
  const V& e(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }  // e_i · e_j
  const V& alpha(std::size_t i) const { return alpha_[i]; }
  V mul(const V& x, const V& y) const { return eval_product(a_, x, y); }
  V basis(std::size_t i) const { return a_.basis_vector(i); }
  const S& eps(std::size_t i, std::size_t j) const { return a_.eps(i, j); }

 private:
  const ColorHomAlgebra<F>& a_;
  std::size_t n_;
  std::vector<V> prod_;
  std::vector<V> alpha_;
};

template <ScalarField F>
void require_same_basis(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& m, const char* what) {
  if (!(m.basis() == a.basis())) throw StructuralError(std::string(what) + " lives on a different basis than the algebra");
}

/// Evenness as a verdict: the first basis vector whose image leaves its degree.
template <ScalarField F>
Verdict<scalar_t<F>> map_degree_verdict(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& m,
                                        const GroupElement& d, const std::string& name) {
  if (m.degree() == d) return Verdict<scalar_t<F>>::pass();
  // The map is homogeneous of some other degree; any nonzero column exposes it.
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto img = m.image(i);
    if (!is_zero_vector(img)) return Verdict<scalar_t<F>>::fail(name, {i}, img, a.zero_vector());
  }
  return Verdict<scalar_t<F>>::pass();  // the zero map has every degree
}

template <ScalarField F>
Verdict<scalar_t<F>> commutes_verdict(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& m,
                                      const std::string& name) {
  const auto lhs = a.alpha().matrix() * m.matrix();
  const auto rhs = m.matrix() * a.alpha().matrix();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto l = lhs.column(i), r = rhs.column(i);
    if (l != r) return Verdict<scalar_t<F>>::fail(name, {i}, std::move(l), std::move(r));
  }
  return Verdict<scalar_t<F>>::pass();
}

}  // namespace detail

template <ScalarField F>
Verdict<scalar_t<F>> check_epsilon_commutative(const ColorHomAlgebra<F>& a) {
  detail::BasisView<F> v(a);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      auto rhs = scale(v.eps(i, j), v.e(j, i));
      if (v.e(i, j) != rhs) return Verdict<scalar_t<F>>::fail("epsilon-commutativity", {i, j}, v.e(i, j), rhs);
    }
  return Verdict<scalar_t<F>>::pass();
}

/// α(x)·(y·z) = (x·y)·α(z).
template <ScalarField F>
Verdict<scalar_t<F>> check_hom_associative(const ColorHomAlgebra<F>& a) {
  detail::BasisView<F> v(a);
  const auto n = v.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = v.mul(v.alpha(i), v.e(j, k));
        auto rhs = v.mul(v.e(i, j), v.alpha(k));
        if (lhs != rhs) return Verdict<scalar_t<F>>::fail("hom-associativity", {i, j, k}, lhs, rhs);
      }
  return Verdict<scalar_t<F>>::pass();
}

namespace detail {

/// (x·y)·α(z) - α(x)·(y·z) on basis elements.
template <ScalarField F>
Vector<scalar_t<F>> hom_associator(const BasisView<F>& v, std::size_t i, std::size_t j, std::size_t k) {
  return v.mul(v.e(i, j), v.alpha(k)) - v.mul(v.alpha(i), v.e(j, k));
}

template <ScalarField F>
Verdict<scalar_t<F>> left_symmetric_loop(const ColorHomAlgebra<F>& a, const std::string& name) {
  BasisView<F> v(a);
  const auto n = v.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = hom_associator(v, i, j, k);
        auto rhs = scale(v.eps(i, j), hom_associator(v, j, i, k));
        if (lhs != rhs) return Verdict<scalar_t<F>>::fail(name, {i, j, k}, lhs, rhs);
      }
  return Verdict<scalar_t<F>>::pass();
}

}  // namespace detail

/// (n1) (x·y)·α(z) = ε(y,z)(x·z)·α(y), then (n2), the Hom-left-symmetric identity.
template <ScalarField F>
Verdict<scalar_t<F>> check_hom_novikov(const ColorHomAlgebra<F>& a) {
  detail::BasisView<F> v(a);
  const auto n = v.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = v.mul(v.e(i, j), v.alpha(k));
        auto rhs = scale(v.eps(j, k), v.mul(v.e(i, k), v.alpha(j)));
        if (lhs != rhs) return Verdict<scalar_t<F>>::fail("n1", {i, j, k}, lhs, rhs);
      }
  return detail::left_symmetric_loop(a, "n2");
}

template <ScalarField F>
Verdict<scalar_t<F>> check_left_symmetric(const ColorHomAlgebra<F>& a) {
  return detail::left_symmetric_loop(a, "hom-left-symmetry");
}

/// ε-skew-symmetry on pairs, then Σ_cyclic ε(z,x)[α(x),[y,z]] = 0 on triples.
/// The algebra's product is read as the bracket.
template <ScalarField F>
Verdict<scalar_t<F>> check_hom_lie(const ColorHomAlgebra<F>& a) {
  detail::BasisView<F> v(a);
  const auto n = v.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto rhs = scale(-v.eps(i, j), v.e(j, i));
      if (v.e(i, j) != rhs) return Verdict<scalar_t<F>>::fail("epsilon-skew-symmetry", {i, j}, v.e(i, j), rhs);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto sum = scale(v.eps(k, i), v.mul(v.alpha(i), v.e(j, k))) +
                   scale(v.eps(i, j), v.mul(v.alpha(j), v.e(k, i))) +
                   scale(v.eps(j, k), v.mul(v.alpha(k), v.e(i, j)));
        if (!is_zero_vector(sum))
          return Verdict<scalar_t<F>>::fail("epsilon-hom-jacobi", {i, j, k}, sum, a.zero_vector());
      }
  return Verdict<scalar_t<F>>::pass();
}

/// f(x·y) = f(x)·'f(y) for an even f from A to A' (same graded basis).
template <ScalarField F>
Verdict<scalar_t<F>> is_weak_morphism(const ColorHomAlgebra<F>& a, const ColorHomAlgebra<F>& target,
                                      const GradedLinearMap<F>& f) {
  detail::require_same_basis(a, f, "map");
  if (!(target.basis() == a.basis())) throw StructuralError("weak morphism: target algebra has a different basis");
  if (auto ev = detail::map_degree_verdict(a, f, a.basis().group().zero(), "even"); !ev) return ev;
  detail::BasisView<F> src(a);
  detail::BasisView<F> dst(target);
  const auto n = a.dim();
  std::vector<Vector<scalar_t<F>>> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = f.image(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = eval_map(f, src.e(i, j));
      auto rhs = dst.mul(img[i], img[j]);
      if (lhs != rhs) return Verdict<scalar_t<F>>::fail("weak-morphism", {i, j}, lhs, rhs);
    }
  return Verdict<scalar_t<F>>::pass();
}

/// Weak morphism with f∘α = α'∘f.
template <ScalarField F>
Verdict<scalar_t<F>> is_morphism(const ColorHomAlgebra<F>& a, const ColorHomAlgebra<F>& target,
                                 const GradedLinearMap<F>& f) {
  if (auto w = is_weak_morphism(a, target, f); !w) return w;
  const auto lhs = f.matrix() * a.alpha().matrix();
  const auto rhs = target.alpha().matrix() * f.matrix();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (lhs.column(i) != rhs.column(i))
      return Verdict<scalar_t<F>>::fail("alpha-compatibility", {i}, lhs.column(i), rhs.column(i));
  return Verdict<scalar_t<F>>::pass();
}

template <ScalarField F>
Verdict<scalar_t<F>> check_multiplicative(const ColorHomAlgebra<F>& a) {
  return is_weak_morphism(a, a, a.alpha());
}

/// α is an automorphism: invertible and multiplicative.
template <ScalarField F>
Verdict<scalar_t<F>> check_regular(const ColorHomAlgebra<F>& a) {
  if (!try_inverse(a.field(), a.alpha().matrix()))
    return Verdict<scalar_t<F>>::fail("invertible", {}, {determinant(a.field(), a.alpha().matrix())}, {});
  return check_multiplicative(a);
}

template <ScalarField F>
Verdict<scalar_t<F>> check_involutive(const ColorHomAlgebra<F>& a) {
  const auto sq = a.alpha().matrix() * a.alpha().matrix();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sq.column(i) != a.basis_vector(i))
      return Verdict<scalar_t<F>>::fail("involution", {i}, sq.column(i), a.basis_vector(i));
  return Verdict<scalar_t<F>>::pass();
}

/// D(x·y) = D(x)·y + ε(d, x) x·D(y) for D homogeneous of degree d.
template <ScalarField F>
Verdict<scalar_t<F>> is_derivation(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& d_map,
                                   const GroupElement& d) {
  detail::require_same_basis(a, d_map, "derivation");
  if (auto dv = detail::map_degree_verdict(a, d_map, d, "degree"); !dv) return dv;
  detail::BasisView<F> v(a);
  const auto n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const auto sign = a.eps(d, a.basis().degree(i));
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = eval_map(d_map, v.e(i, j));
      auto rhs = v.mul(d_map.image(i), v.basis(j)) + scale(sign, v.mul(v.basis(i), d_map.image(j)));
      if (lhs != rhs) return Verdict<scalar_t<F>>::fail("leibniz", {i, j}, lhs, rhs);
    }
  }
  return Verdict<scalar_t<F>>::pass();
}

/// β even, α∘β = β∘α, and β(x)·β(y) = β(β(x)·y) (left) / = β(x·β(y)) (right).
template <ScalarField F>
Verdict<scalar_t<F>> is_averaging(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& beta, Side side) {
  detail::require_same_basis(a, beta, "averaging operator");
  if (auto ev = detail::map_degree_verdict(a, beta, a.basis().group().zero(), "even"); !ev) return ev;
  if (auto cv = detail::commutes_verdict(a, beta, "commutes-with-alpha"); !cv) return cv;
  detail::BasisView<F> v(a);
  const auto n = a.dim();
  auto loop = [&](bool left) -> Verdict<scalar_t<F>> {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto lhs = v.mul(beta.image(i), beta.image(j));
        auto rhs = left ? eval_map(beta, v.mul(beta.image(i), v.basis(j)))
                        : eval_map(beta, v.mul(v.basis(i), beta.image(j)));
        if (lhs != rhs)
          return Verdict<scalar_t<F>>::fail(left ? "left-averaging" : "right-averaging", {i, j}, lhs, rhs);
      }
    return Verdict<scalar_t<F>>::pass();
  };
  if (side != Side::right)
    if (auto l = loop(true); !l) return l;
  if (side != Side::left) return loop(false);
  return Verdict<scalar_t<F>>::pass();
}

/// β even, α∘β = β∘α, and β(x·y) = β(x)·y (left) / = x·β(y) (right).
template <ScalarField F>
Verdict<scalar_t<F>> is_centroid(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& beta, Side side) {
  detail::require_same_basis(a, beta, "centroid candidate");
  if (auto ev = detail::map_degree_verdict(a, beta, a.basis().group().zero(), "even"); !ev) return ev;
  if (auto cv = detail::commutes_verdict(a, beta, "commutes-with-alpha"); !cv) return cv;
  detail::BasisView<F> v(a);
  const auto n = a.dim();
  auto loop = [&](bool left) -> Verdict<scalar_t<F>> {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto lhs = eval_map(beta, v.e(i, j));
        auto rhs = left ? v.mul(beta.image(i), v.basis(j)) : v.mul(v.basis(i), beta.image(j));
        if (lhs != rhs)
          return Verdict<scalar_t<F>>::fail(left ? "left-centroid" : "right-centroid", {i, j}, lhs, rhs);
      }
    return Verdict<scalar_t<F>>::pass();
  };
  if (side != Side::right)
    if (auto l = loop(true); !l) return l;
  if (side != Side::left) return loop(false);
  return Verdict<scalar_t<F>>::pass();
}

/// [R(x), R(y)] = R([R(x), y] + [x, R(y)] + λ[x, y]) with R even and commuting with α.
template <ScalarField F>
Verdict<scalar_t<F>> is_rota_baxter(const ColorHomAlgebra<F>& lie, const GradedLinearMap<F>& r,
                                    const scalar_t<F>& lambda) {
  detail::require_same_basis(lie, r, "Rota-Baxter operator");
  if (auto ev = detail::map_degree_verdict(lie, r, lie.basis().group().zero(), "even"); !ev) return ev;
  if (auto cv = detail::commutes_verdict(lie, r, "commutes-with-alpha"); !cv) return cv;
  detail::BasisView<F> v(lie);
  const auto n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = v.mul(r.image(i), r.image(j));
      auto inner = v.mul(r.image(i), v.basis(j)) + v.mul(v.basis(i), r.image(j)) + scale(lambda, v.e(i, j));
      auto rhs = eval_map(r, inner);
      if (lhs != rhs) return Verdict<scalar_t<F>>::fail("rota-baxter", {i, j}, lhs, rhs);
    }
  return Verdict<scalar_t<F>>::pass();
}

/// The ε-commutator of A satisfies the ε-Hom-Jacobi identity.
template <ScalarField F>
Verdict<scalar_t<F>> check_lie_admissible(const ColorHomAlgebra<F>& a) {
  return check_hom_lie(a.with(commutator_structure(a), a.alpha())).prefixed("commutator: ");
}

/// x ∈ Z(α(L)): [x, α(y)] = 0 for every y.
template <ScalarField F>
bool in_alpha_center(const ColorHomAlgebra<F>& lie, const Vector<scalar_t<F>>& x) {
  if (x.size() != lie.dim()) throw StructuralError("in_alpha_center: vector length does not match dim");
  for (std::size_t j = 0; j < lie.dim(); ++j)
    if (!is_zero_vector(eval_product(lie, x, lie.alpha().image(j)))) return false;
  return true;
}

/// Condition (f): f([f(x),y] + [x,f(y)]) - [f(x),f(y)] ∈ Z(α(L)), witnessed at
/// (i, j, k) where the defect of (e_i, e_j) fails to kill α(e_k); then
/// condition (g): [f([f(x),y]), α(z)] = ε(y,z)[f([f(x),z]), α(y)].
template <ScalarField F>
Verdict<scalar_t<F>> check_f_conditions(const ColorHomAlgebra<F>& lie, const GradedLinearMap<F>& f) {
  detail::require_same_basis(lie, f, "f");
  detail::BasisView<F> v(lie);
  const auto n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto defect = eval_map(f, v.mul(f.image(i), v.basis(j)) + v.mul(v.basis(i), f.image(j))) -
                    v.mul(f.image(i), f.image(j));
      for (std::size_t k = 0; k < n; ++k) {
        auto br = v.mul(defect, v.alpha(k));
        if (!is_zero_vector(br)) return Verdict<scalar_t<F>>::fail("f-condition", {i, j, k}, br, lie.zero_vector());
      }
    }
  std::vector<Vector<scalar_t<F>>> ffx(n * n);  // f([f(e_i), e_j])
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ffx[i * n + j] = eval_map(f, v.mul(f.image(i), v.basis(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = v.mul(ffx[i * n + j], v.alpha(k));
        auto rhs = scale(v.eps(j, k), v.mul(ffx[i * n + k], v.alpha(j)));
        if (lhs != rhs) return Verdict<scalar_t<F>>::fail("g-condition", {i, j, k}, lhs, rhs);
      }
  return Verdict<scalar_t<F>>::pass();
}

/// The two cyclic identities satisfied by the commutator of a Hom-Novikov algebra:
///   ε(z,x)[x,y]·α(z) + ε(x,y)[y,z]·α(x) + ε(y,z)[z,x]·α(y) = 0
///   ε(z,x)α(x)·[y,z] + ε(x,y)α(y)·[z,x] + ε(y,z)α(z)·[x,y] = 0
template <ScalarField F>
Verdict<scalar_t<F>> check_lemma_nl(const ColorHomAlgebra<F>& a) {
  detail::BasisView<F> v(a);
  const auto n = v.dim();
  std::vector<Vector<scalar_t<F>>> br(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br[i * n + j] = v.e(i, j) - scale(v.eps(i, j), v.e(j, i));
  auto bracket = [&](std::size_t i, std::size_t j) -> const Vector<scalar_t<F>>& { return br[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto sum = scale(v.eps(k, i), v.mul(bracket(i, j), v.alpha(k))) +
                   scale(v.eps(i, j), v.mul(bracket(j, k), v.alpha(i))) +
                   scale(v.eps(j, k), v.mul(bracket(k, i), v.alpha(j)));
        if (!is_zero_vector(sum)) return Verdict<scalar_t<F>>::fail("cyclic-right", {i, j, k}, sum, a.zero_vector());
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto sum = scale(v.eps(k, i), v.mul(v.alpha(i), bracket(j, k))) +
                   scale(v.eps(i, j), v.mul(v.alpha(j), bracket(k, i))) +
                   scale(v.eps(j, k), v.mul(v.alpha(k), bracket(i, j)));
        if (!is_zero_vector(sum)) return Verdict<scalar_t<F>>::fail("cyclic-left", {i, j, k}, sum, a.zero_vector());
      }
  return Verdict<scalar_t<F>>::pass();
}

}  // namespace colorhom
