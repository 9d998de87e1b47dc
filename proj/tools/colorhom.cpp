// colorhom: check identities, apply constructions and run theorem suites on
// algebra documents.

#include "colorhom/runner.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace colorhom;

namespace {

int emit(const Report& r, const std::string& format) {
  (r.status == kUsage ? std::cerr : std::cout) << r.render(format == "machine");
  return r.status;
}

template <ScalarField F>
Report search_report(const Document<F>& doc, const std::string& predicate, std::uint64_t seed, std::size_t budget,
                     const std::string& form, const std::string& lambda, const std::string& out_path) {
  MapSearch<F> req;
  req.predicate = parse_map_predicate(predicate);
  req.seed = seed;
  req.budget = budget;
  req.lambda = doc.algebra.field().parse(lambda);
  if (!form.empty()) req.form = doc.form(form);
  const auto hits = search_maps(doc.algebra, req);
  Document<F> out = doc;
  out.maps.clear();
  for (std::size_t i = 0; i < hits.size(); ++i) out.maps.emplace("hit" + std::to_string(i), hits[i]);
  out.provenance = Json{{"search", std::string(normalize_check_name(predicate))}, {"seed", seed}, {"budget", budget}};
  const auto text = serialize(out);
  if (!out_path.empty()) write_file(out_path, text);
  Report r;
  r.machine = Json{{"status", "pass"}, {"predicate", predicate}, {"hits", hits.size()}};
  r.text = out_path.empty() ? text : std::to_string(hits.size()) + " maps written to " + out_path + "\n";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for color Hom-algebras"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));

  std::string file, name, out, with, side = "both", lambda = "0", field = "rational", form;
  std::vector<std::string> args;
  bool unchecked = false, permissive = false;
  std::uint64_t seed = 0;
  std::size_t budget = 10000, n = 3;

  auto* check = app.add_subcommand("check", "run a named check");
  check->add_option("file", file, "algebra document")->required();
  check->add_option("check", name, "check name")->required();
  check->add_option("args", args, "map and form names");
  check->add_option("--side", side)->check(CLI::IsMember({"left", "right", "both"}));
  check->add_option("--lambda", lambda, "Rota-Baxter weight");
  check->add_flag("--permissive", permissive, "do not require the form to be even");

  auto* construct = app.add_subcommand("construct", "apply a named construction");
  construct->add_option("file", file, "algebra document")->required();
  construct->add_option("construction", name, "construction name")->required();
  construct->add_option("args", args, "map names, form names, integers or vectors");
  construct->add_option("--with", with, "second algebra for direct_sum and tensor_product");
  construct->add_option("--out", out, "output document");
  construct->add_flag("--unchecked", unchecked, "skip hypothesis validation");

  auto* suite = app.add_subcommand("suite", "run a theorem manifest");
  suite->add_option("manifest", file, "manifest document")->required();

  auto* catalog = app.add_subcommand("catalog", "materialize a recipe, list recipes or search for maps");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list recipe names");
  auto* make = catalog->add_subcommand("make", "write a recipe to a document");
  make->add_option("recipe", name)->required();
  make->add_option("--n", n, "dimension parameter");
  make->add_option("--field", field, "\"rational\" or a prime");
  make->add_option("--out", out, "output document");
  auto* search = catalog->add_subcommand("search", "seeded search for maps satisfying a predicate");
  search->add_option("file", file, "algebra document")->required();
  search->add_option("predicate", name)->required();
  search->add_option("--seed", seed);
  search->add_option("--budget", budget);
  search->add_option("--form", form, "form name for symmetric_automorphism");
  search->add_option("--lambda", lambda, "Rota-Baxter weight");
  search->add_option("--out", out, "output document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*check) {
      CheckOptions opt{parse_side(side), lambda, permissive ? FormMode::permissive : FormMode::strict};
      return emit(run_check(file, name, args, opt), format);
    }
    if (*construct) return emit(run_construct(file, name, args, with, out, unchecked ? Mode::unchecked : Mode::strict), format);
    if (*suite) return emit(run_suite(file), format);
    if (*list) {
      for (auto r : kRecipes) std::cout << r << "\n";
      return kPass;
    }
    if (*make) {
      AnyDocument doc = field == "rational"
                            ? AnyDocument(materialize_recipe(name, RationalField{}, {n}))
                            : AnyDocument(materialize_recipe(name, PrimeField(static_cast<std::uint32_t>(std::stoul(field))), {n}));
      const auto text = serialize(doc);
      if (out.empty()) std::cout << text;
      else write_file(out, text);
      return kPass;
    }
    if (*search) {
      const auto doc = parse_document(read_file(file));
      return emit(std::visit([&](const auto& d) { return search_report(d, name, seed, budget, form, lambda, out); }, doc),
                  format);
    }
  } catch (const std::exception& e) {
    return emit(usage_report(e.what()), format);
  }
  return kUsage;
}
