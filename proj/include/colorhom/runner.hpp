#pragma once

// Named checks and constructions over documents, the theorem-suite runner and
// report rendering. Exit statuses: 0 pass, 1 an identity or hypothesis fails,
// 2 usage or structural error.

#include "colorhom/catalog.hpp"
#include "colorhom/constructions.hpp"
#include "colorhom/document.hpp"
#include "colorhom/named.hpp"
#include "colorhom/quadratic.hpp"
#include "colorhom/recipes.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorhom {

enum ExitStatus : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Bad command line, unknown names, unreadable files.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << text;
}

struct CheckOptions {
  Side side = Side::both;
  std::string lambda = "0";
  FormMode form_mode = FormMode::strict;
};

inline Side parse_side(std::string_view s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  if (s == "both") return Side::both;
  throw UsageError("side must be left, right or both");
}

template <ScalarField F>
Json verdict_json(const F& field, const Verdict<scalar_t<F>>& v) {
  Json out{{"passes", v.passes()}, {"witness", nullptr}};
  if (const auto& w = v.witness()) {
    Json left = Json::array(), right = Json::array();
    for (const auto& x : w->left) left.push_back(field.format(x));
    for (const auto& x : w->right) right.push_back(field.format(x));
    out["witness"] = Json{{"identity", w->identity}, {"indices", w->indices}, {"left", left}, {"right", right}};
  }
  return out;
}

namespace detail {

inline const std::string& arg(const std::vector<std::string>& args, std::size_t i, std::string_view what) {
  if (i >= args.size()) throw UsageError("missing argument: " + std::string(what));
  return args[i];
}

inline unsigned parse_count(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used != s.size() || v > 64) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError("expected a small non-negative integer, got '" + s + "'");
  }
}

template <ScalarField F>
Vector<scalar_t<F>> parse_vector(const F& field, const std::string& s, std::size_t dim) {
  Vector<scalar_t<F>> v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(field.parse(item));
  if (v.size() != dim) throw UsageError("vector '" + s + "' needs " + std::to_string(dim) + " comma-separated entries");
  return v;
}

}  // namespace detail

/// Map and form checks take their operands by name from `args`.
template <ScalarField F>
Verdict<scalar_t<F>> run_named_check(const Document<F>& doc, std::string_view raw,
                                     const std::vector<std::string>& args, const CheckOptions& opt = {}) {
  const auto& a = doc.algebra;
  const auto name = normalize_check_name(raw);
  if (is_algebra_check(name)) return run_algebra_check(a, name);
  using detail::arg;
  if (name == "derivation") {
    const auto& d = doc.map(arg(args, 0, "map"));
    return is_derivation(a, d, d.degree());
  }
  if (name == "weak_morphism") return is_weak_morphism(a, a, doc.map(arg(args, 0, "map")));
  if (name == "morphism") return is_morphism(a, a, doc.map(arg(args, 0, "map")));
  if (name == "averaging") return is_averaging(a, doc.map(arg(args, 0, "map")), opt.side);
  if (name == "centroid") return is_centroid(a, doc.map(arg(args, 0, "map")), opt.side);
  if (name == "rota_baxter") return is_rota_baxter(a, doc.map(arg(args, 0, "map")), a.field().parse(opt.lambda));
  if (name == "f_conditions") return check_f_conditions(a, doc.map(arg(args, 0, "map")));
  if (name == "quadratic_structure") return check_quadratic_structure(a, doc.form(arg(args, 0, "form")), opt.form_mode);
  if (name == "quadratic_hom_lie") return check_quadratic_hom_lie(a, doc.form(arg(args, 0, "form")), opt.form_mode);
  if (name == "symmetric_automorphism")
    return is_symmetric_automorphism(a, doc.form(arg(args, 0, "form")), doc.map(arg(args, 1, "map")));
  throw UsageError("unknown check '" + std::string(raw) + "'");
}

/// Applies a named construction. `other` is the second operand of direct_sum
/// and tensor_product. Maps survive when the basis is unchanged; quadratic
/// constructions emit their form as "B".
template <ScalarField F>
Document<F> run_named_construction(const Document<F>& doc, std::string_view raw, const std::vector<std::string>& args,
                                   const Document<F>* other, Mode mode) {
  const auto& a = doc.algebra;
  const auto& field = a.field();
  const auto name = normalize_check_name(raw);
  using detail::arg;
  auto keep = [&](ColorHomAlgebra<F> out) {
    Document<F> d{std::move(out), {}, {}, nullptr};
    if (d.algebra.basis() == a.basis()) d.maps = doc.maps;
    return d;
  };
  auto quadratic = [&](QuadraticAlgebra<F> q) {
    auto d = keep(std::move(q.algebra));
    std::string companion;
    if (q.form.companion == d.algebra.alpha()) {
      if (!(q.form.companion == GradedLinearMap<F>::identity(field, a.basis()))) companion = "alpha";
    } else if (!(q.form.companion == GradedLinearMap<F>::identity(field, a.basis()))) {
      companion = "companion";
      d.maps.insert_or_assign(companion, q.form.companion);
    }
    d.forms.emplace("B", NamedForm<F>{q.form.gram, companion});
    return d;
  };
  auto second = [&]() -> const Document<F>& {
    if (!other) throw UsageError("construction '" + std::string(raw) + "' needs a second algebra");
    return *other;
  };

  if (name == "yau_twist") return keep(yau_twist(a, doc.map(arg(args, 0, "map")), mode));
  if (name == "power_twist") return keep(power_twist(a, detail::parse_count(arg(args, 0, "n")), mode));
  if (name == "centroid_twist") return keep(centroid_twist(a, doc.map(arg(args, 0, "map")), mode));
  if (name == "xi_square_twist")
    return keep(xi_square_twist(a, detail::parse_vector(field, arg(args, 0, "xi"), a.dim()), mode));
  if (name == "commutator" || name == "commutator_algebra") return keep(commutator_algebra(a));
  if (name == "averaging_product") return keep(averaging_product(a, doc.map(arg(args, 0, "map")), mode));
  if (name == "derivation_product") return keep(derivation_product(a, doc.map(arg(args, 0, "map")), mode));
  if (name == "composed_derivation_product")
    return keep(composed_derivation_product(a, doc.map(arg(args, 0, "alpha map")), doc.map(arg(args, 1, "derivation")),
                                            mode));
  if (name == "bracket_operator_product") return keep(bracket_operator_product(a, doc.map(arg(args, 0, "map")), mode));
  if (name == "direct_sum") return keep(direct_sum(a, second().algebra, mode));
  if (name == "tensor_product") return keep(tensor_product(a, second().algebra, mode));
  if (name == "untwist_involutive") return keep(untwist_involutive(a, mode));
  if (name == "regular_lie_untwist") return keep(regular_lie_untwist(a, mode));
  if (name == "quadratic_yau_twist")
    return quadratic(quadratic_yau_twist(a, doc.form(arg(args, 0, "form")), doc.map(arg(args, 1, "map")), mode));
  if (name == "quadratic_power_twist")
    return quadratic(
        quadratic_power_twist(a, doc.form(arg(args, 0, "form")), detail::parse_count(arg(args, 1, "n")), mode));
  if (name == "quadratic_commutator") return quadratic(quadratic_commutator(a, doc.form(arg(args, 0, "form")), mode));
  if (name == "regular_quadratic_commutator")
    return quadratic(regular_quadratic_commutator(a, doc.form(arg(args, 0, "form")), mode));
  if (name == "quadratic_untwist_involutive")
    return quadratic(quadratic_untwist_involutive(a, doc.form(arg(args, 0, "form")), mode));
  throw UsageError("unknown construction '" + std::string(raw) + "'");
}

// ---------------------------------------------------------------------------
// Reports

struct Report {
  int status = kPass;
  Json machine;
  std::string text;

  std::string render(bool machine_format) const {
    return machine_format ? serialize_json(machine) : text;
  }
};

inline Report usage_report(const std::string& message) {
  return {kUsage, Json{{"status", "error"}, {"message", message}}, "error: " + message + "\n"};
}

inline std::string document_digest(const std::string& text) { return fnv1a_digest(text); }

/// colorhom check FILE CHECK [ARGS...]
inline Report run_check(const std::string& path, const std::string& check, const std::vector<std::string>& args,
                        const CheckOptions& opt = {}) {
  try {
    const auto text = read_file(path);
    const auto doc = parse_document(text);
    return std::visit(
        [&](const auto& d) {
          const auto v = run_named_check(d, check, args, opt);
          Report r;
          r.status = v.passes() ? kPass : kFail;
          r.machine = Json{{"check", std::string(normalize_check_name(check))},
                           {"arguments", args},
                           {"input_digest", document_digest(text)},
                           {"status", v.passes() ? "pass" : "fail"},
                           {"verdict", verdict_json(d.algebra.field(), v)}};
          r.text = std::string(normalize_check_name(check)) + ": " + describe(d.algebra.field(), v) + "\n";
          return r;
        },
        doc);
  } catch (const std::invalid_argument& e) {
    return usage_report(e.what());
  }
}

/// colorhom construct FILE NAME [ARGS...] [--with FILE2] --out OUT
inline Report run_construct(const std::string& path, const std::string& construction,
                            const std::vector<std::string>& args, const std::string& second_path,
                            const std::string& out_path, Mode mode) {
  try {
    const auto text = read_file(path);
    const auto doc = parse_document(text);
    std::optional<AnyDocument> other;
    std::string other_text;
    if (!second_path.empty()) {
      other_text = read_file(second_path);
      other = parse_document(other_text);
    }
    return std::visit(
        [&](const auto& d) {
          using D = std::decay_t<decltype(d)>;
          const D* second = nullptr;
          if (other) {
            second = std::get_if<D>(&*other);
            if (!second) throw UsageError("the two algebras are over different kinds of field");
          }
          auto result = run_named_construction(d, construction, args, second, mode);
          Json inputs = Json::array({document_digest(text)});
          if (other) inputs.push_back(document_digest(other_text));
          result.provenance = Json{{"construction", std::string(normalize_check_name(construction))},
                                   {"arguments", args},
                                   {"mode", mode == Mode::strict ? "strict" : "unchecked"},
                                   {"inputs", inputs}};
          const auto out = serialize(result);
          Report r;
          if (!out_path.empty()) write_file(out_path, out);
          r.machine = Json{{"construction", std::string(normalize_check_name(construction))},
                           {"status", "pass"},
                           {"dim", result.algebra.dim()},
                           {"output", out_path}};
          r.text = out_path.empty() ? out : "wrote " + out_path + "\n";
          return r;
        },
        doc);
  } catch (const PreconditionError& e) {
    return {kFail, Json{{"status", "fail"}, {"hypothesis", e.hypothesis()}, {"detail", e.detail()}},
            std::string("precondition failed: ") + e.hypothesis() + ": " + e.detail() + "\n"};
  } catch (const std::invalid_argument& e) {
    return usage_report(e.what());
  }
}

// ---------------------------------------------------------------------------
// Suite

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const std::string& section) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw UsageError(section + ": expected an array of strings");
  for (const auto& e : j) {
    if (!e.is_string()) throw UsageError(section + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

struct CheckSpec {
  std::string name;
  std::vector<std::string> args;
  CheckOptions options;
};

inline CheckSpec check_spec(const Json& j, const std::string& section) {
  if (j.is_string()) return {j.get<std::string>(), {}, {}};
  if (!j.is_object() || !j.contains("check")) throw UsageError(section + ": expected a check name or object");
  CheckSpec c{j["check"].get<std::string>(), string_list(j.value("args", Json()), section + ".args"), {}};
  if (j.contains("side")) c.options.side = parse_side(j["side"].get<std::string>());
  if (j.contains("lambda")) c.options.lambda = j["lambda"].get<std::string>();
  if (j.value("permissive", false)) c.options.form_mode = FormMode::permissive;
  return c;
}

inline AnyDocument load_instance(const Json& j, const std::filesystem::path& base, const std::string& section) {
  if (!j.is_object()) throw UsageError(section + ": expected an object");
  if (j.contains("file")) return parse_document(read_file(base / j["file"].get<std::string>()));
  if (!j.contains("recipe")) throw UsageError(section + ": needs 'file' or 'recipe'");
  const auto recipe = j["recipe"].get<std::string>();
  RecipeArgs args;
  if (j.contains("n")) args.n = j["n"].get<std::size_t>();
  const auto field = j.value("field", Json("rational"));
  if (field == "rational") return materialize_recipe(recipe, RationalField{}, args);
  if (field.is_number_unsigned()) return materialize_recipe(recipe, PrimeField(field.get<std::uint32_t>()), args);
  throw UsageError(section + ".field: expected \"rational\" or a prime");
}

template <ScalarField F>
Document<F> perturbed(Document<F> d, const Json& p, const std::string& section) {
  if (!p.is_array() || p.size() != 4) throw UsageError(section + ": expected [i, j, k, value]");
  auto c = d.algebra.structure();
  const auto n = d.algebra.dim();
  c(as_index(p[0], n, section), as_index(p[1], n, section), as_index(p[2], n, section)) =
      as_scalar(d.algebra.field(), p[3], section);
  d.algebra = d.algebra.with(std::move(c), d.algebra.alpha());
  return d;
}

}  // namespace detail

/// Runs one manifest row. Structural problems propagate as exceptions.
template <ScalarField F>
Json run_suite_row(const Json& row, const Document<F>& instance, const Document<F>* second) {
  Json out{{"name", row.value("name", std::string())}, {"stage", nullptr}, {"check", nullptr}, {"verdict", nullptr}};
  const auto& field = instance.algebra.field();
  auto failed = [&](const char* stage, const std::string& check, Json verdict) {
    out["stage"] = stage;
    out["check"] = check;
    out["verdict"] = std::move(verdict);
    return false;
  };
  auto run_checks = [&](const Document<F>& d, const char* key, const char* stage) {
    if (!row.contains(key)) return true;
    for (std::size_t i = 0; i < row[key].size(); ++i) {
      const auto c = detail::check_spec(row[key][i], std::string(key) + "[" + std::to_string(i) + "]");
      const auto v = run_named_check(d, c.name, c.args, c.options);
      if (!v) return failed(stage, c.name, verdict_json(field, v));
    }
    return true;
  };

  bool ok = run_checks(instance, "hypotheses", "hypothesis");
  if (ok) {
    std::optional<Document<F>> result;
    if (row.contains("construction")) {
      const auto& cj = row["construction"];
      const auto name = cj.at("name").get<std::string>();
      try {
        result = run_named_construction(instance, name, detail::string_list(cj.value("args", Json()), "construction.args"),
                                        second, Mode::strict);
      } catch (const PreconditionError& e) {
        ok = failed("construction", name, Json{{"hypothesis", e.hypothesis()}, {"detail", e.detail()}});
      }
      if (ok && cj.contains("dim") && result->algebra.dim() != cj["dim"].get<std::size_t>())
        ok = failed("construction", name,
                    Json{{"detail", "dimension " + std::to_string(result->algebra.dim()) + ", expected " +
                                        cj["dim"].dump()}});
    }
    if (ok) ok = run_checks(result ? *result : instance, "conclusions", "conclusion");
  }
  const bool expect_pass = row.value("expect", std::string("pass")) != "fail";
  out["outcome"] = ok ? "pass" : "fail";
  out["expect"] = expect_pass ? "pass" : "fail";
  out["status"] = (ok == expect_pass) ? "pass" : "fail";
  return out;
}

/// colorhom suite MANIFEST
inline Report run_suite(const std::string& manifest_path) {
  try {
    const auto text = read_file(manifest_path);
    Json manifest;
    try {
      manifest = parse_json_text(text);
    } catch (const DocumentError& e) {
      throw UsageError("manifest " + std::string(e.what()));
    }
    const auto base = std::filesystem::path(manifest_path).parent_path();
    const Json rows = manifest.is_object() ? manifest.value("rows", Json::array()) : Json();
    if (!rows.is_array()) throw UsageError("manifest: 'rows' must be an array");

    Report r;
    Json results = Json::array();
    std::size_t passed = 0, failed = 0, errors = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const auto section = "rows[" + std::to_string(i) + "]";
      Json res;
      try {
        if (!row.is_object() || !row.contains("instance")) throw UsageError(section + ": needs an 'instance'");
        auto inst = detail::load_instance(row["instance"], base, section + ".instance");
        std::optional<AnyDocument> other;
        if (row.contains("second")) other = detail::load_instance(row["second"], base, section + ".second");
        res = std::visit(
            [&](auto& d) {
              using D = std::decay_t<decltype(d)>;
              if (row.contains("perturb")) d = detail::perturbed(std::move(d), row["perturb"], section + ".perturb");
              const D* second = nullptr;
              if (other && !(second = std::get_if<D>(&*other)))
                throw UsageError(section + ": operands over different kinds of field");
              return run_suite_row(row, d, second);
            },
            inst);
      } catch (const std::exception& e) {
        res = Json{{"name", row.is_object() ? row.value("name", std::string()) : std::string()},
                   {"status", "error"},
                   {"message", e.what()}};
      }
      const auto status = res["status"].get<std::string>();
      std::string line = (status == "pass" ? "PASS " : status == "fail" ? "FAIL " : "ERROR ") +
                         res["name"].get<std::string>();
      if (status == "pass") {
        ++passed;
      } else if (status == "fail") {
        ++failed;
        line += res["expect"] == "fail" ? ": expected a failure, every check passed"
                                        : ": " + res["stage"].get<std::string>() + " " + res["check"].get<std::string>() +
                                              " " + res["verdict"].dump();
      } else {
        ++errors;
        line += ": " + res["message"].get<std::string>();
      }
      r.text += line + "\n";
      results.push_back(std::move(res));
    }
    r.status = errors ? kUsage : failed ? kFail : kPass;
    r.text += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " + std::to_string(errors) +
              " errors\n";
    r.machine = Json{{"status", errors ? "error" : failed ? "fail" : "pass"},
                     {"passed", passed},
                     {"failed", failed},
                     {"errors", errors},
                     {"rows", std::move(results)}};
    return r;
  } catch (const std::invalid_argument& e) {
    return usage_report(e.what());
  }
}

}  // namespace colorhom
