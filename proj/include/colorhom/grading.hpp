#pragma once

// Finitely generated abelian grading groups Z^r + Z_{n_1} + ... + Z_{n_t} and
// skew-symmetric bicharacters given by their values on generator pairs.

#include "colorhom/errors.hpp"
#include "colorhom/matrix.hpp"
#include "colorhom/scalar.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace colorhom {

/// Coordinates in a GradeGroup; torsion components are kept reduced so that
/// equality of elements is equality of coordinate vectors.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline std::string to_string(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < g.coords.size(); ++i) out << (i ? "," : "") << g.coords[i];
  out << ')';
  return out.str();
}

class GradeGroup {
 public:
  GradeGroup() = default;
  GradeGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders)
      : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
    for (auto n : torsion_)
      if (n < 2) throw StructuralError("GradeGroup: torsion orders must be >= 2");
  }

  static GradeGroup trivial() { return {}; }
  static GradeGroup cyclic(std::int64_t n) { return {0, {n}}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const { return torsion_; }
  std::size_t generator_count() const { return free_rank_ + torsion_.size(); }

  /// Order of generator i, or nullopt for a free generator.
  std::optional<std::int64_t> order(std::size_t i) const {
    if (i < free_rank_) return std::nullopt;
    return torsion_.at(i - free_rank_);
  }

  GroupElement zero() const { return {std::vector<std::int64_t>(generator_count(), 0)}; }

  GroupElement element(std::vector<std::int64_t> coords) const {
    if (coords.size() != generator_count())
      throw StructuralError("GroupElement: expected " + std::to_string(generator_count()) + " coordinates");
    GroupElement g{std::move(coords)};
    canonicalize(g);
    return g;
  }

  GroupElement generator(std::size_t i) const {
    auto g = zero();
    g.coords.at(i) = 1;
    return g;
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    canonicalize(r);
    return r;
  }

  GroupElement negate(const GroupElement& a) const {
    check(a);
    GroupElement r = a;
    for (auto& c : r.coords) c = -c;
    canonicalize(r);
    return r;
  }

  GroupElement subtract(const GroupElement& a, const GroupElement& b) const { return add(a, negate(b)); }

  bool is_canonical(const GroupElement& a) const {
    if (a.coords.size() != generator_count()) return false;
    for (std::size_t t = 0; t < torsion_.size(); ++t) {
      const auto c = a.coords[free_rank_ + t];
      if (c < 0 || c >= torsion_[t]) return false;
    }
    return true;
  }

  friend bool operator==(const GradeGroup&, const GradeGroup&) = default;

 private:
  void check(const GroupElement& a) const {
    if (a.coords.size() != generator_count())
      throw StructuralError("GroupElement " + to_string(a) + " does not belong to this group");
  }
  void canonicalize(GroupElement& g) const {
    for (std::size_t t = 0; t < torsion_.size(); ++t) {
      auto& c = g.coords[free_rank_ + t];
      c %= torsion_[t];
      if (c < 0) c += torsion_[t];
    }
  }

  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

struct BicharacterReport {
  enum class Axiom { none, skew, torsion_compatibility, invertibility };
  Axiom violated = Axiom::none;
  std::size_t i = 0;
  std::size_t j = 0;

  bool passes() const { return violated == Axiom::none; }
};

inline const char* to_string(BicharacterReport::Axiom a) {
  switch (a) {
    case BicharacterReport::Axiom::none: return "none";
    case BicharacterReport::Axiom::skew: return "skew";
    case BicharacterReport::Axiom::torsion_compatibility: return "torsion-compatibility";
    case BicharacterReport::Axiom::invertibility: return "invertibility";
  }
  return "?";
}

/// Checks a generator table against the bicharacter axioms. Reports the first
/// violated axiom (skew, then torsion compatibility, then invertibility) with
/// the offending generator pair. A table of the wrong shape is a structural
/// error, not an axiom failure.
template <ScalarField F>
BicharacterReport validate_bicharacter(const F& field, const GradeGroup& group, const Matrix<scalar_t<F>>& table) {
  const std::size_t n = group.generator_count();
  if (table.rows() != n || table.cols() != n)
    throw StructuralError("bicharacter table is " + std::to_string(table.rows()) + "x" +
                          std::to_string(table.cols()) + " but the group has " + std::to_string(n) +
                          " generators");
  using Axiom = BicharacterReport::Axiom;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(table(i, j) * table(j, i) == field.one())) return {Axiom::skew, i, j};
  for (std::size_t i = 0; i < n; ++i) {
    const auto ord = group.order(i);
    if (!ord) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(power(field, table(i, j), *ord) == field.one())) return {Axiom::torsion_compatibility, i, j};
      if (!(power(field, table(j, i), *ord) == field.one())) return {Axiom::torsion_compatibility, j, i};
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_zero(table(i, j))) return {Axiom::invertibility, i, j};
  return {};
}

/// A validated skew-symmetric bicharacter, stored by its generator table and
/// extended bi-multiplicatively.
template <ScalarField F>
class Bicharacter {
 public:
  using Scalar = scalar_t<F>;

  Bicharacter(F field, GradeGroup group, Matrix<Scalar> table)
      : field_(std::move(field)), group_(std::move(group)), table_(std::move(table)) {
    const auto report = validate_bicharacter(field_, group_, table_);
    if (!report.passes())
      throw StructuralError(std::string("bicharacter violates the ") + to_string(report.violated) +
                            " axiom at generator pair (" + std::to_string(report.i) + "," +
                            std::to_string(report.j) + ")");
  }

  /// The bicharacter identically 1.
  static Bicharacter trivial(F field, GradeGroup group) {
    const auto n = group.generator_count();
    Matrix<Scalar> t(n, n, field.one());
    return Bicharacter(std::move(field), std::move(group), std::move(t));
  }

  /// (-1)^{|a||b|} on Z_2.
  static Bicharacter super(F field) {
    Matrix<Scalar> t(1, 1, -field.one());
    return Bicharacter(field, GradeGroup::cyclic(2), std::move(t));
  }

  const F& field() const { return field_; }
  const GradeGroup& group() const { return group_; }
  const Matrix<Scalar>& table() const { return table_; }

  /// prod_{i,j} E[i][j]^{a_i c_j}; exponents touching a torsion generator are
  /// reduced modulo its order.
  Scalar operator()(const GroupElement& a, const GroupElement& c) const {
    if (!group_.is_canonical(a) || !group_.is_canonical(c))
      throw StructuralError("bicharacter evaluated on a non-canonical group element");
    Scalar result = field_.one();
    const auto n = group_.generator_count();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coords[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (c.coords[j] == 0) continue;
        __int128 e = static_cast<__int128>(a.coords[i]) * c.coords[j];
        if (auto o = group_.order(i)) e %= *o;
        else if (auto oj = group_.order(j)) e %= *oj;
        result = result * power(field_, table_(i, j), static_cast<long long>(e));
      }
    }
    return result;
  }

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.field_ == b.field_ && a.group_ == b.group_ && a.table_ == b.table_;
  }

 private:
  F field_;
  GradeGroup group_;
  Matrix<Scalar> table_;
};

}  // namespace colorhom
