#pragma once

// JSON documents describing an algebra together with named maps and forms.
//
//   {
//     "provenance": {...},                      optional, free-form
//     "field": {"kind": "rational"} | {"kind": "prime", "p": 7},
//     "group": {"free_rank": 0, "torsion_orders": [2]},
//     "bicharacter": {"gen_table": [["-1"]]},
//     "basis": {"dim": 2, "degrees": [[0], [1]]},
//     "product": [[i, j, k, "v"], ...],          e_i·e_j has coefficient v on e_k
//     "alpha": [[i, k, "v"], ...],               e_i ↦ v·e_k, or {"dense": rows}
//     "maps": {"name": {"degree": [...], "entries": [[i, k, "v"], ...]}},
//     "forms": {"name": {"gram": rows, "companion": "map name" | "alpha"}}
//   }
//
// Omitted entries are zero. Scalars may be JSON integers or strings "n" / "n/d".
// serialize() writes the canonical form: fixed key order, sparse lists sorted,
// zero entries dropped, scalars as reduced strings.

#include "colorhom/graded.hpp"
#include "colorhom/quadratic.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace colorhom {

using Json = nlohmann::ordered_json;

/// A document that could not be read; `section()` names the offending part.
class DocumentError : public StructuralError {
 public:
  DocumentError(std::string section, const std::string& message)
      : StructuralError(section.empty() ? message : section + ": " + message), section_(std::move(section)) {}
  const std::string& section() const { return section_; }

 private:
  std::string section_;
};

template <ScalarField F>
struct NamedForm {
  Matrix<scalar_t<F>> gram;
  std::string companion;  // empty for the identity

  friend bool operator==(const NamedForm&, const NamedForm&) = default;
};

template <ScalarField F>
struct Document {
  ColorHomAlgebra<F> algebra;
  std::map<std::string, GradedLinearMap<F>> maps;
  std::map<std::string, NamedForm<F>> forms;
  Json provenance;  // null when absent

  const GradedLinearMap<F>& map(const std::string& name) const {
    if (name == "alpha") return algebra.alpha();
    auto it = maps.find(name);
    if (it == maps.end()) throw DocumentError("maps", "no map named '" + name + "'");
    return it->second;
  }

  BilinearFormStructure<F> form(const std::string& name) const {
    auto it = forms.find(name);
    if (it == forms.end()) throw DocumentError("forms", "no form named '" + name + "'");
    const auto& f = it->second;
    if (f.companion.empty()) return BilinearFormStructure<F>::plain(algebra.field(), algebra.basis(), f.gram);
    return {f.gram, map(f.companion)};
  }

  friend bool operator==(const Document& a, const Document& b) {
    return a.algebra == b.algebra && a.maps == b.maps && a.forms == b.forms && a.provenance == b.provenance;
  }
};

template <ScalarField F>
Document<F> plain_document(ColorHomAlgebra<F> a) {
  return {std::move(a), {}, {}, nullptr};
}

using AnyDocument = std::variant<Document<RationalField>, Document<PrimeField>>;

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
inline std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline const Json& member(const Json& obj, const char* key, const std::string& section) {
  if (!obj.is_object()) throw DocumentError(section, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(section, std::string("missing key '") + key + "'");
  return *it;
}

inline std::int64_t as_integer(const Json& j, const std::string& section) {
  if (!j.is_number_integer()) throw DocumentError(section, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

inline std::size_t as_index(const Json& j, std::size_t dim, const std::string& section) {
  const auto v = as_integer(j, section);
  if (v < 0 || static_cast<std::size_t>(v) >= dim)
    throw DocumentError(section, "index " + std::to_string(v) + " out of range for dimension " + std::to_string(dim));
  return static_cast<std::size_t>(v);
}

template <ScalarField F>
scalar_t<F> as_scalar(const F& field, const Json& j, const std::string& section) {
  try {
    if (j.is_number_integer()) return field.from_int(j.get<long long>());
    if (j.is_string()) return field.parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(section, e.what());
  }
  throw DocumentError(section, "expected a scalar (integer or string), got " + j.dump());
}

inline const Json& as_array(const Json& j, const std::string& section) {
  if (!j.is_array()) throw DocumentError(section, "expected an array");
  return j;
}

template <ScalarField F>
Matrix<scalar_t<F>> dense_rows(const F& field, const Json& rows, std::size_t r, std::size_t c,
                               const std::string& section) {
  as_array(rows, section);
  if (rows.size() != r) throw DocumentError(section, "expected " + std::to_string(r) + " rows");
  Matrix<scalar_t<F>> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto where = section + "[" + std::to_string(i) + "]";
    as_array(rows[i], where);
    if (rows[i].size() != c) throw DocumentError(where, "expected " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = as_scalar(field, rows[i][k], where);
  }
  return m;
}

/// Sparse [i, k, v] (e_i ↦ v e_k, summed) or {"dense": rows} with rows[k][i]
/// the coefficient of e_k in the image of e_i.
template <ScalarField F>
Matrix<scalar_t<F>> map_matrix(const F& field, const Json& j, std::size_t dim, const std::string& section) {
  if (j.is_object()) return dense_rows(field, member(j, "dense", section), dim, dim, section + ".dense");
  as_array(j, section);
  Matrix<scalar_t<F>> m(dim, dim);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto where = section + "[" + std::to_string(t) + "]";
    const auto& e = as_array(j[t], where);
    if (e.size() != 3) throw DocumentError(where, "expected [i, k, value]");
    const auto i = as_index(e[0], dim, where);
    const auto k = as_index(e[1], dim, where);
    m(k, i) += as_scalar(field, e[2], where);
  }
  return m;
}

inline GroupElement parse_element(const GradeGroup& g, const Json& j, const std::string& section) {
  as_array(j, section);
  if (j.size() != g.generator_count())
    throw DocumentError(section, "expected " + std::to_string(g.generator_count()) + " coordinates");
  std::vector<std::int64_t> coords;
  for (const auto& c : j) coords.push_back(as_integer(c, section));
  return g.element(std::move(coords));
}

template <ScalarField F>
Document<F> parse_with_field(const F& field, const Json& root) {
  const auto& gj = member(root, "group", "group");
  const auto free_rank = as_integer(member(gj, "free_rank", "group"), "group.free_rank");
  if (free_rank < 0) throw DocumentError("group.free_rank", "must be non-negative");
  std::vector<std::int64_t> torsion;
  if (auto it = gj.find("torsion_orders"); it != gj.end())
    for (const auto& o : as_array(*it, "group.torsion_orders")) torsion.push_back(as_integer(o, "group.torsion_orders"));
  GradeGroup group = [&] {
    try {
      return GradeGroup(static_cast<std::size_t>(free_rank), torsion);
    } catch (const StructuralError& e) {
      throw DocumentError("group", e.what());
    }
  }();
  const auto gens = group.generator_count();

  Matrix<scalar_t<F>> table(gens, gens, field.one());
  if (auto it = root.find("bicharacter"); it != root.end())
    table = dense_rows(field, member(*it, "gen_table", "bicharacter"), gens, gens, "bicharacter.gen_table");
  auto eps = [&] {
    try {
      return Bicharacter<F>(field, group, table);
    } catch (const StructuralError& e) {
      throw DocumentError("bicharacter", e.what());
    }
  }();

  const auto& bj = member(root, "basis", "basis");
  const auto dim_raw = as_integer(member(bj, "dim", "basis"), "basis.dim");
  if (dim_raw < 0) throw DocumentError("basis.dim", "must be non-negative");
  const auto dim = static_cast<std::size_t>(dim_raw);
  std::vector<GroupElement> degrees(dim, group.zero());
  if (auto it = bj.find("degrees"); it != bj.end()) {
    as_array(*it, "basis.degrees");
    if (it->size() != dim) throw DocumentError("basis.degrees", "expected one degree per basis vector");
    for (std::size_t i = 0; i < dim; ++i)
      degrees[i] = parse_element(group, (*it)[i], "basis.degrees[" + std::to_string(i) + "]");
  }
  GradedBasis basis(group, std::move(degrees));

  StructureTensor<scalar_t<F>> c(dim);
  if (auto it = root.find("product"); it != root.end()) {
    as_array(*it, "product");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const auto where = "product[" + std::to_string(t) + "]";
      const auto& e = as_array((*it)[t], where);
      if (e.size() != 4) throw DocumentError(where, "expected [i, j, k, value]");
      const auto i = as_index(e[0], dim, where), j = as_index(e[1], dim, where), k = as_index(e[2], dim, where);
      c(i, j, k) += as_scalar(field, e[3], where);
    }
  }

  auto make_map = [&](Matrix<scalar_t<F>> m, GroupElement degree, const std::string& section) {
    try {
      return GradedLinearMap<F>(basis, std::move(m), std::move(degree));
    } catch (const StructuralError& e) {
      throw DocumentError(section, e.what());
    }
  };
  auto alpha = GradedLinearMap<F>::identity(field, basis);
  if (auto it = root.find("alpha"); it != root.end())
    alpha = make_map(map_matrix(field, *it, dim, "alpha"), group.zero(), "alpha");

  Document<F> doc{[&] {
                    try {
                      return make_algebra(basis, eps, std::move(c), alpha);
                    } catch (const StructuralError& e) {
                      throw DocumentError("product", e.what());
                    }
                  }(),
                  {},
                  {},
                  nullptr};

  if (auto it = root.find("maps"); it != root.end()) {
    if (!it->is_object()) throw DocumentError("maps", "expected an object");
    for (const auto& [name, mj] : it->items()) {
      const auto section = "maps." + name;
      if (name == "alpha") throw DocumentError(section, "'alpha' is reserved");
      auto degree = group.zero();
      if (auto d = mj.find("degree"); d != mj.end()) degree = parse_element(group, *d, section + ".degree");
      const Json& body = mj.contains("dense") ? mj : member(mj, "entries", section);
      doc.maps.emplace(name, make_map(map_matrix(field, body, dim, section), degree, section));
    }
  }
  if (auto it = root.find("forms"); it != root.end()) {
    if (!it->is_object()) throw DocumentError("forms", "expected an object");
    for (const auto& [name, fj] : it->items()) {
      const auto section = "forms." + name;
      NamedForm<F> f{dense_rows(field, member(fj, "gram", section), dim, dim, section + ".gram"), ""};
      if (auto cj = fj.find("companion"); cj != fj.end() && !cj->is_null()) {
        if (!cj->is_string()) throw DocumentError(section + ".companion", "expected a map name");
        f.companion = cj->template get<std::string>();
        if (f.companion != "alpha" && !doc.maps.contains(f.companion))
          throw DocumentError(section + ".companion", "no map named '" + f.companion + "'");
      }
      doc.forms.emplace(name, std::move(f));
    }
  }
  if (auto it = root.find("provenance"); it != root.end()) doc.provenance = *it;
  return doc;
}

inline std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(detail::line_context(text, e.byte == 0 ? 0 : e.byte - 1), "syntax error");
  }
}

inline AnyDocument parse_document_json(const Json& root) {
  const auto& fj = detail::member(root, "field", "field");
  const auto& kind = detail::member(fj, "kind", "field");
  if (!kind.is_string()) throw DocumentError("field.kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return detail::parse_with_field(RationalField{}, root);
  if (k == "prime") {
    const auto p = detail::as_integer(detail::member(fj, "p", "field"), "field.p");
    if (p < 0 || p > 0xffffffffLL) throw DocumentError("field.p", "out of range");
    try {
      const PrimeField field(static_cast<std::uint32_t>(p));
      return detail::parse_with_field(field, root);
    } catch (const DocumentError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw DocumentError("field.p", e.what());
    }
  }
  throw DocumentError("field.kind", "unknown field kind '" + k + "'");
}

inline AnyDocument parse_document(std::string_view text) { return parse_document_json(parse_json_text(text)); }

/// Parses and requires a particular field type.
template <ScalarField F>
Document<F> parse_document_as(std::string_view text) {
  auto any = parse_document(text);
  if (auto* d = std::get_if<Document<F>>(&any)) return std::move(*d);
  throw DocumentError("field", "document is over a different kind of field");
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline Json field_json(const RationalField&) { return Json{{"kind", "rational"}}; }
inline Json field_json(const PrimeField& f) { return Json{{"kind", "prime"}, {"p", f.prime()}}; }

template <ScalarField F>
Json dense_json(const F& field, const Matrix<scalar_t<F>>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(field.format(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <ScalarField F>
Json sparse_map_json(const F& field, const Matrix<scalar_t<F>>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (!is_zero(m(k, i))) out.push_back(Json::array({i, k, field.format(m(k, i))}));
  return out;
}

inline Json element_json(const GroupElement& g) { return Json(g.coords); }

/// Arrays of scalars on one line, everything else indented by two spaces.
inline void emit(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  auto flat = [](const Json& a) {
    for (const auto& e : a)
      if (e.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << pad << Json(k).dump() << ": ";
      emit(out, v, indent + 2);
    }
    out << "\n" << close << "}";
  } else if (j.is_array() && !flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ",\n";
      out << pad;
      emit(out, j[i], indent + 2);
    }
    out << "\n" << close << "]";
  } else if (j.is_array()) {
    out << "[";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << "]";
  } else {
    out << j.dump();
  }
}

}  // namespace detail

template <ScalarField F>
Json to_json(const Document<F>& doc) {
  const auto& a = doc.algebra;
  const auto& field = a.field();
  const auto& g = a.basis().group();
  Json root;
  if (!doc.provenance.is_null()) root["provenance"] = doc.provenance;
  root["field"] = detail::field_json(field);
  root["group"] = Json{{"free_rank", g.free_rank()}, {"torsion_orders", g.torsion_orders()}};
  if (g.generator_count() > 0) root["bicharacter"] = Json{{"gen_table", detail::dense_json(field, a.bicharacter().table())}};
  Json basis{{"dim", a.dim()}};
  if (g.generator_count() > 0) {
    Json deg = Json::array();
    for (const auto& d : a.basis().degrees()) deg.push_back(detail::element_json(d));
    basis["degrees"] = std::move(deg);
  }
  root["basis"] = std::move(basis);
  Json product = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!is_zero(a.structure()(i, j, k))) product.push_back(Json::array({i, j, k, field.format(a.structure()(i, j, k))}));
  root["product"] = std::move(product);
  root["alpha"] = detail::sparse_map_json(field, a.alpha().matrix());
  if (!doc.maps.empty()) {
    Json maps = Json::object();
    for (const auto& [name, m] : doc.maps)
      maps[name] = Json{{"degree", detail::element_json(m.degree())}, {"entries", detail::sparse_map_json(field, m.matrix())}};
    root["maps"] = std::move(maps);
  }
  if (!doc.forms.empty()) {
    Json forms = Json::object();
    for (const auto& [name, f] : doc.forms) {
      Json fj{{"gram", detail::dense_json(field, f.gram)}};
      if (!f.companion.empty()) fj["companion"] = f.companion;
      forms[name] = std::move(fj);
    }
    root["forms"] = std::move(forms);
  }
  return root;
}

inline std::string serialize_json(const Json& j) {
  std::ostringstream out;
  detail::emit(out, j, 0);
  out << "\n";
  return out.str();
}

template <ScalarField F>
std::string serialize(const Document<F>& doc) {
  return serialize_json(to_json(doc));
}

inline std::string serialize(const AnyDocument& doc) {
  return std::visit([](const auto& d) { return serialize(d); }, doc);
}

}  // namespace colorhom
