#pragma once

// String names for the algebra-only checks, shared by the catalog claims, the
// command line and the suite runner.

#include "colorhom/checks.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace colorhom {

inline constexpr std::array<std::string_view, 11> kAlgebraChecks = {
    "epsilon_commutative", "hom_associative", "hom_novikov", "left_symmetric", "hom_lie",  "multiplicative",
    "regular",             "involutive",      "lie_admissible", "lemma_nl",   "lie_algebra"};

/// Strips an optional "check_" or "is_" prefix.
inline std::string_view normalize_check_name(std::string_view name) {
  for (std::string_view prefix : {"check_", "is_"})
    if (name.substr(0, prefix.size()) == prefix) return name.substr(prefix.size());
  return name;
}

inline bool is_algebra_check(std::string_view name) {
  name = normalize_check_name(name);
  for (auto n : kAlgebraChecks)
    if (n == name) return true;
  return false;
}

/// Runs an algebra-only check by name; throws std::invalid_argument for unknown names.
/// "lie_algebra" is check_hom_lie with the twisting map required to be the identity.
template <ScalarField F>
Verdict<scalar_t<F>> run_algebra_check(const ColorHomAlgebra<F>& a, std::string_view raw) {
  const auto name = normalize_check_name(raw);
  if (name == "epsilon_commutative") return check_epsilon_commutative(a);
  if (name == "hom_associative") return check_hom_associative(a);
  if (name == "hom_novikov") return check_hom_novikov(a);
  if (name == "left_symmetric") return check_left_symmetric(a);
  if (name == "hom_lie") return check_hom_lie(a);
  if (name == "multiplicative") return check_multiplicative(a);
  if (name == "regular") return check_regular(a);
  if (name == "involutive") return check_involutive(a);
  if (name == "lie_admissible") return check_lie_admissible(a);
  if (name == "lemma_nl") return check_lemma_nl(a);
  if (name == "lie_algebra") {
    const auto id = Matrix<scalar_t<F>>::identity(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.alpha().matrix().column(i) != id.column(i))
        return Verdict<scalar_t<F>>::fail("alpha-is-identity", {i}, a.alpha().image(i), id.column(i));
    return check_hom_lie(a);
  }
  throw std::invalid_argument("unknown check '" + std::string(raw) + "'");
}

}  // namespace colorhom
