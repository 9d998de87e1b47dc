#pragma once

// Graded vector spaces with a fixed homogeneous basis, graded linear maps and
// color Hom-algebras presented by a dense structure-constant tensor.

#include "colorhom/errors.hpp"
#include "colorhom/grading.hpp"
#include "colorhom/matrix.hpp"
#include "colorhom/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace colorhom {

/// A basis e_0..e_{n-1} of homogeneous vectors; degrees[i] is the degree of e_i.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(GradeGroup group, std::vector<GroupElement> degrees)
      : group_(std::move(group)), degrees_(std::move(degrees)) {
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      if (!group_.is_canonical(degrees_[i]))
        throw StructuralError("basis degree " + std::to_string(i) + " is not a canonical group element");
  }

  /// n basis vectors, all of degree zero.
  static GradedBasis trivial(GradeGroup group, std::size_t n) {
    std::vector<GroupElement> d(n, group.zero());
    return {std::move(group), std::move(d)};
  }

  std::size_t dim() const { return degrees_.size(); }
  const GradeGroup& group() const { return group_; }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  GradeGroup group_;
  std::vector<GroupElement> degrees_;
};

/// Degree of v when it is homogeneous and nonzero; nullopt for zero or mixed vectors.
template <class S>
std::optional<GroupElement> homogeneous_degree(const GradedBasis& basis, const Vector<S>& v) {
  std::optional<GroupElement> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!deg) deg = basis.degree(i);
    else if (*deg != basis.degree(i)) return std::nullopt;
  }
  return deg;
}

template <class S>
bool is_homogeneous_of(const GradedBasis& basis, const Vector<S>& v, const GroupElement& d) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i]) && basis.degree(i) != d) return false;
  return true;
}

/// A linear endomorphism homogeneous of a declared degree. Column i of the
/// matrix is the image of e_i.
template <ScalarField F>
class GradedLinearMap {
 public:
  using Scalar = scalar_t<F>;

  GradedLinearMap(GradedBasis basis, Matrix<Scalar> matrix, GroupElement degree)
      : basis_(std::move(basis)), matrix_(std::move(matrix)), degree_(std::move(degree)) {
    const auto n = basis_.dim();
    if (matrix_.rows() != n || matrix_.cols() != n)
      throw StructuralError("map matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " on a basis of dimension " + std::to_string(n));
    if (!basis_.group().is_canonical(degree_)) throw StructuralError("map degree is not a canonical group element");
    const auto& g = basis_.group();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(matrix_(k, i)) && basis_.degree(k) != g.add(basis_.degree(i), degree_))
          throw StructuralError("map is not homogeneous of degree " + to_string(degree_) + ": e_" +
                                std::to_string(i) + " has a component on e_" + std::to_string(k));
  }

  /// Even map from a matrix.
  GradedLinearMap(GradedBasis basis, Matrix<Scalar> matrix)
      : GradedLinearMap(basis, std::move(matrix), basis.group().zero()) {}

  static GradedLinearMap identity(const F& field, const GradedBasis& basis) {
    return {basis, Matrix<Scalar>::identity(field, basis.dim())};
  }
  static GradedLinearMap zero(const GradedBasis& basis) {
    return {basis, Matrix<Scalar>(basis.dim(), basis.dim())};
  }
  static GradedLinearMap scalar(const F& field, const GradedBasis& basis, const Scalar& s) {
    return {basis, s * Matrix<Scalar>::identity(field, basis.dim())};
  }

  const GradedBasis& basis() const { return basis_; }
  const Matrix<Scalar>& matrix() const { return matrix_; }
  const GroupElement& degree() const { return degree_; }
  std::size_t dim() const { return basis_.dim(); }
  bool is_even() const { return degree_ == basis_.group().zero(); }

  Vector<Scalar> image(std::size_t i) const { return matrix_.column(i); }

  friend bool operator==(const GradedLinearMap&, const GradedLinearMap&) = default;

 private:
  GradedBasis basis_;
  Matrix<Scalar> matrix_;
  GroupElement degree_;
};

template <ScalarField F>
Vector<scalar_t<F>> eval_map(const GradedLinearMap<F>& m, const Vector<scalar_t<F>>& x) {
  if (x.size() != m.dim()) throw StructuralError("eval_map: vector length does not match the basis");
  return m.matrix() * x;
}

/// m ∘ n, of degree deg(m) + deg(n).
template <ScalarField F>
GradedLinearMap<F> compose_maps(const GradedLinearMap<F>& m, const GradedLinearMap<F>& n) {
  if (!(m.basis() == n.basis())) throw StructuralError("compose_maps: maps live on different bases");
  return {m.basis(), m.matrix() * n.matrix(), m.basis().group().add(m.degree(), n.degree())};
}

template <ScalarField F>
GradedLinearMap<F> map_power(const F& field, const GradedLinearMap<F>& m, unsigned n) {
  auto r = GradedLinearMap<F>::identity(field, m.basis());
  for (unsigned i = 0; i < n; ++i) r = compose_maps(r, m);
  return r;
}

template <ScalarField F>
GradedLinearMap<F> invert_map(const F& field, const GradedLinearMap<F>& m) {
  if (!m.is_even()) throw StructuralError("invert_map: only even maps are inverted");
  auto inv = try_inverse(field, m.matrix());
  if (!inv) throw NotRegularError("map is not regular (singular matrix)");
  return {m.basis(), std::move(*inv)};
}

/// Row-major dense tensor c[i][j][k] with e_i · e_j = sum_k c[i][j][k] e_k.
template <class S>
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  S& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }

  Vector<S> product(std::size_t i, std::size_t j) const {
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vector<S>(first, first + static_cast<std::ptrdiff_t>(dim_));
  }

  void set_product(std::size_t i, std::size_t j, const Vector<S>& v) {
    for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = v[k];
  }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<S> data_;
};

/// (A, ·, ε, α): a graded space, an even product, a bicharacter and an even
/// twisting map. Instances are immutable and validated on construction.
template <ScalarField F>
class ColorHomAlgebra {
 public:
  using Field = F;
  using Scalar = scalar_t<F>;

  ColorHomAlgebra(GradedBasis basis, Bicharacter<F> eps, StructureTensor<Scalar> structure, GradedLinearMap<F> alpha)
      : basis_(std::move(basis)), eps_(std::move(eps)), c_(std::move(structure)), alpha_(std::move(alpha)) {
    const auto n = basis_.dim();
    if (!(eps_.group() == basis_.group()))
      throw StructuralError("bicharacter is defined on a different grading group than the basis");
    if (c_.dim() != n)
      throw StructuralError("structure tensor has dimension " + std::to_string(c_.dim()) + ", basis has " +
                            std::to_string(n));
    if (!(alpha_.basis() == basis_)) throw StructuralError("alpha is defined on a different basis");
    if (!alpha_.is_even()) throw StructuralError("alpha must be even");
    const auto& g = basis_.group();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto target = g.add(basis_.degree(i), basis_.degree(j));
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(c_(i, j, k)) && basis_.degree(k) != target)
            throw StructuralError("product is not even: c[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "][" + std::to_string(k) + "] is nonzero");
      }
    eps_table_ = Matrix<Scalar>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) eps_table_(i, j) = eps_(basis_.degree(i), basis_.degree(j));
  }

  const F& field() const { return eps_.field(); }
  const GradedBasis& basis() const { return basis_; }
  const Bicharacter<F>& bicharacter() const { return eps_; }
  const StructureTensor<Scalar>& structure() const { return c_; }
  const GradedLinearMap<F>& alpha() const { return alpha_; }
  std::size_t dim() const { return basis_.dim(); }

  /// ε(deg e_i, deg e_j).
  const Scalar& eps(std::size_t i, std::size_t j) const { return eps_table_(i, j); }
  Scalar eps(const GroupElement& a, const GroupElement& b) const { return eps_(a, b); }

  Vector<Scalar> basis_vector(std::size_t i) const {
    Vector<Scalar> v(dim());
    v.at(i) = field().one();
    return v;
  }
  Vector<Scalar> zero_vector() const { return Vector<Scalar>(dim()); }

  /// A copy with a different product and/or twisting map on the same graded space.
  ColorHomAlgebra with(StructureTensor<Scalar> structure, GradedLinearMap<F> alpha) const {
    return {basis_, eps_, std::move(structure), std::move(alpha)};
  }

  friend bool operator==(const ColorHomAlgebra& a, const ColorHomAlgebra& b) {
    return a.basis_ == b.basis_ && a.eps_ == b.eps_ && a.c_ == b.c_ && a.alpha_ == b.alpha_;
  }

 private:
  GradedBasis basis_;
  Bicharacter<F> eps_;
  StructureTensor<Scalar> c_;
  GradedLinearMap<F> alpha_;
  Matrix<Scalar> eps_table_;
};

template <ScalarField F>
ColorHomAlgebra<F> make_algebra(GradedBasis basis, Bicharacter<F> eps, StructureTensor<scalar_t<F>> structure,
                                GradedLinearMap<F> alpha) {
  return {std::move(basis), std::move(eps), std::move(structure), std::move(alpha)};
}

/// Bilinear extension of the structure tensor.
template <ScalarField F>
Vector<scalar_t<F>> eval_product(const ColorHomAlgebra<F>& a, const Vector<scalar_t<F>>& x,
                                 const Vector<scalar_t<F>>& y) {
  const auto n = a.dim();
  if (x.size() != n || y.size() != n) throw StructuralError("eval_product: vector length does not match dim");
  Vector<scalar_t<F>> out(n);
  const auto& c = a.structure();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const auto s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k))) out[k] += s * c(i, j, k);
    }
  }
  return out;
}

template <ScalarField F>
bool map_commutes_with_alpha(const ColorHomAlgebra<F>& a, const GradedLinearMap<F>& m) {
  if (!(m.basis() == a.basis())) throw StructuralError("map lives on a different basis");
  return a.alpha().matrix() * m.matrix() == m.matrix() * a.alpha().matrix();
}

/// Structure tensor obtained by applying a linear map to every product e_i·e_j.
template <ScalarField F>
StructureTensor<scalar_t<F>> compose_product(const GradedLinearMap<F>& m, const StructureTensor<scalar_t<F>>& c) {
  const auto n = c.dim();
  StructureTensor<scalar_t<F>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, m.matrix() * c.product(i, j));
  return out;
}

}  // namespace colorhom
