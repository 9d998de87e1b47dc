#pragma once

#include "colorhom/matrix.hpp"
#include "colorhom/scalar.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace colorhom {

/// The first failing instance of an identity: which identity (or clause),
/// at which basis indices, and the two sides that differ.
template <class S>
struct Witness {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector<S> left;
  Vector<S> right;

  friend bool operator==(const Witness&, const Witness&) = default;
};

template <class S>
class Verdict {
 public:
  Verdict() = default;
  static Verdict pass() { return {}; }
  static Verdict fail(std::string identity, std::vector<std::size_t> indices, Vector<S> left, Vector<S> right) {
    Verdict v;
    v.witness_ = Witness<S>{std::move(identity), std::move(indices), std::move(left), std::move(right)};
    return v;
  }

  bool passes() const { return !witness_.has_value(); }
  explicit operator bool() const { return passes(); }
  const std::optional<Witness<S>>& witness() const { return witness_; }

  /// Same verdict with the identity name prefixed, for checks that delegate.
  Verdict prefixed(const std::string& prefix) const {
    Verdict v = *this;
    if (v.witness_) v.witness_->identity = prefix + v.witness_->identity;
    return v;
  }

 private:
  std::optional<Witness<S>> witness_;
};

template <ScalarField F>
std::string format_vector(const F& field, const Vector<scalar_t<F>>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << field.format(v[i]);
  out << ']';
  return out.str();
}

template <ScalarField F>
std::string describe(const F& field, const Verdict<scalar_t<F>>& v) {
  if (v.passes()) return "pass";
  const auto& w = *v.witness();
  std::ostringstream out;
  out << "fail: " << w.identity << " at (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) out << (i ? "," : "") << w.indices[i];
  out << "): left = " << format_vector(field, w.left) << ", right = " << format_vector(field, w.right);
  return out.str();
}

}  // namespace colorhom
