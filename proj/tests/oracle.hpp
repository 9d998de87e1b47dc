#pragma once

// Independent reference evaluator for the identities: works on whole vectors,
// recomputes the bicharacter from its generator table, and never touches the
// library's checkers or cached basis products.

#include "colorhom/graded.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using namespace colorhom;

template <ScalarField F>
struct Hv {
  std::vector<std::int64_t> deg;  // canonical coordinates
  Vector<scalar_t<F>> v;
};

template <ScalarField F>
class Evaluator {
 public:
  using S = scalar_t<F>;

  explicit Evaluator(const ColorHomAlgebra<F>& a) : a_(a), n_(a.dim()) {
    const auto& g = a.basis().group();
    for (std::size_t i = 0; i < g.generator_count(); ++i) orders_.push_back(g.order(i).value_or(0));
    for (std::size_t i = 0; i < n_; ++i) degrees_.push_back(a.basis().degree(i).coords);
  }

  const F& field() const { return a_.field(); }
  std::size_t dim() const { return n_; }

  std::vector<std::int64_t> add(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    std::vector<std::int64_t> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] = x[i] + y[i];
      if (orders_[i]) r[i] = ((r[i] % orders_[i]) + orders_[i]) % orders_[i];
    }
    return r;
  }

  /// ∏ E[i][j]^(x_i y_j), by repeated multiplication or division.
  S eps(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    const auto& t = a_.bicharacter().table();
    S r = field().one();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) {
        std::int64_t e = x[i] * y[j];
        const S base = e >= 0 ? t(i, j) : inverse(t(i, j));
        for (std::int64_t s = 0; s < (e >= 0 ? e : -e); ++s) r = r * base;
      }
    return r;
  }

  Vector<S> mul(const Vector<S>& x, const Vector<S>& y) const {
    Vector<S> r(n_, field().zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) r[k] = r[k] + x[i] * y[j] * a_.structure()(i, j, k);
    return r;
  }

  Vector<S> apply(const Matrix<S>& m, const Vector<S>& x) const {
    Vector<S> r(n_, field().zero());
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i) r[k] = r[k] + m(k, i) * x[i];
    return r;
  }
  Vector<S> alpha(const Vector<S>& x) const { return apply(a_.alpha().matrix(), x); }

  Vector<S> axpy(const S& s, const Vector<S>& x, Vector<S> y) const {
    for (std::size_t i = 0; i < n_; ++i) y[i] = y[i] + s * x[i];
    return y;
  }
  Vector<S> sub(const Vector<S>& x, const Vector<S>& y) const { return axpy(-field().one(), y, x); }
  bool zero(const Vector<S>& x) const {
    for (const auto& e : x)
      if (!is_zero(e)) return false;
    return true;
  }
  bool same(const Vector<S>& x, const Vector<S>& y) const { return zero(sub(x, y)); }

  Vector<S> bracket(const Hv<F>& x, const Hv<F>& y) const {
    return axpy(-eps(x.deg, y.deg), mul(y.v, x.v), mul(x.v, y.v));
  }

  /// Random vector supported on basis vectors of one randomly chosen degree,
  /// with coefficients in [-9, 9].
  Hv<F> random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
    std::uniform_int_distribution<long long> coef(-9, 9);
    Hv<F> h{degrees_[pick(rng)], Vector<S>(n_, field().zero())};
    for (std::size_t i = 0; i < n_; ++i)
      if (degrees_[i] == h.deg) h.v[i] = field().from_int(coef(rng));
    return h;
  }

 private:
  const ColorHomAlgebra<F>& a_;
  std::size_t n_;
  std::vector<std::int64_t> orders_;
  std::vector<std::vector<std::int64_t>> degrees_;
};

/// Identities on homogeneous x, y, z; true when the identity holds.
template <ScalarField F>
using Identity = std::function<bool(const Evaluator<F>&, const Hv<F>&, const Hv<F>&, const Hv<F>&)>;

template <ScalarField F>
std::map<std::string, Identity<F>> identities() {
  std::map<std::string, Identity<F>> m;
  m["epsilon_commutative"] = [](const auto& e, const auto& x, const auto& y, const auto&) {
    return e.same(e.mul(x.v, y.v), e.axpy(e.eps(x.deg, y.deg), e.mul(y.v, x.v), Vector<scalar_t<F>>(e.dim())));
  };
  m["hom_associative"] = [](const auto& e, const auto& x, const auto& y, const auto& z) {
    return e.same(e.mul(e.alpha(x.v), e.mul(y.v, z.v)), e.mul(e.mul(x.v, y.v), e.alpha(z.v)));
  };
  auto n1 = [](const Evaluator<F>& e, const Hv<F>& x, const Hv<F>& y, const Hv<F>& z) {
    const auto lhs = e.mul(e.mul(x.v, y.v), e.alpha(z.v));
    const auto rhs = e.mul(e.mul(x.v, z.v), e.alpha(y.v));
    return e.same(lhs, e.axpy(e.eps(y.deg, z.deg), rhs, Vector<scalar_t<F>>(e.dim())));
  };
  auto n2 = [](const Evaluator<F>& e, const Hv<F>& x, const Hv<F>& y, const Hv<F>& z) {
    const auto lhs = e.sub(e.mul(e.mul(x.v, y.v), e.alpha(z.v)), e.mul(e.alpha(x.v), e.mul(y.v, z.v)));
    const auto swapped = e.sub(e.mul(e.mul(y.v, x.v), e.alpha(z.v)), e.mul(e.alpha(y.v), e.mul(x.v, z.v)));
    return e.same(lhs, e.axpy(e.eps(x.deg, y.deg), swapped, Vector<scalar_t<F>>(e.dim())));
  };
  m["hom_novikov"] = [=](const auto& e, const auto& x, const auto& y, const auto& z) {
    return n1(e, x, y, z) && n2(e, x, y, z);
  };
  m["left_symmetric"] = n2;
  m["multiplicative"] = [](const auto& e, const auto& x, const auto& y, const auto&) {
    return e.same(e.alpha(e.mul(x.v, y.v)), e.mul(e.alpha(x.v), e.alpha(y.v)));
  };
  auto jacobi = [](const Evaluator<F>& e, const Hv<F>& x, const Hv<F>& y, const Hv<F>& z, auto br) {
    auto term = [&](const Hv<F>& a, const Hv<F>& b, const Hv<F>& c) {
      const Hv<F> inner{e.add(b.deg, c.deg), br(b, c)};
      const Hv<F> ax{a.deg, e.alpha(a.v)};
      return std::make_pair(e.eps(c.deg, a.deg), br(ax, inner));
    };
    auto sum = Vector<scalar_t<F>>(e.dim(), e.field().zero());
    for (const auto& [s, v] : {term(x, y, z), term(y, z, x), term(z, x, y)}) sum = e.axpy(s, v, sum);
    return e.zero(sum);
  };
  m["hom_lie"] = [=](const auto& e, const auto& x, const auto& y, const auto& z) {
    auto prod = [&](const Hv<F>& a, const Hv<F>& b) { return e.mul(a.v, b.v); };
    const bool skew = e.same(e.mul(x.v, y.v), e.axpy(-e.eps(x.deg, y.deg), e.mul(y.v, x.v), Vector<scalar_t<F>>(e.dim())));
    return skew && jacobi(e, x, y, z, prod);
  };
  m["lie_admissible"] = [=](const auto& e, const auto& x, const auto& y, const auto& z) {
    auto br = [&](const Hv<F>& a, const Hv<F>& b) { return e.bracket(a, b); };
    return jacobi(e, x, y, z, br);
  };
  m["lemma_nl"] = [](const auto& e, const auto& x, const auto& y, const auto& z) {
    using V = Vector<scalar_t<F>>;
    V right(e.dim(), e.field().zero()), left(e.dim(), e.field().zero());
    const Hv<F>* t[3] = {&x, &y, &z};
    for (int r = 0; r < 3; ++r) {
      const auto& a = *t[r];
      const auto& b = *t[(r + 1) % 3];
      const auto& c = *t[(r + 2) % 3];
      const auto s = e.eps(c.deg, a.deg);
      right = e.axpy(s, e.mul(e.bracket(a, b), e.alpha(c.v)), right);
      left = e.axpy(s, e.mul(e.alpha(a.v), e.bracket(b, c)), left);
    }
    return e.zero(right) && e.zero(left);
  };
  return m;
}

/// Number of tuples (out of `count`) on which the identity fails.
template <ScalarField F>
std::size_t failures(const ColorHomAlgebra<F>& a, const Identity<F>& id, std::uint64_t seed, std::size_t count) {
  Evaluator<F> e(a);
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const auto x = e.random(rng), y = e.random(rng), z = e.random(rng);
    if (!id(e, x, y, z)) ++bad;
  }
  return bad;
}

/// Exhaustive evaluation on basis triples, for small algebras.
template <ScalarField F>
bool holds_on_basis(const ColorHomAlgebra<F>& a, const Identity<F>& id) {
  Evaluator<F> e(a);
  const auto n = a.dim();
  auto unit = [&](std::size_t i) { return Hv<F>{a.basis().degree(i).coords, a.basis_vector(i)}; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!id(e, unit(i), unit(j), unit(k))) return false;
  return true;
}

}  // namespace oracle
