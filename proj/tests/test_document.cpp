#include "colorhom/recipes.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace colorhom;

namespace {

const RationalField Q;

std::string section_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.section();
  }
  return "<parsed>";
}

std::string message_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "<parsed>";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Document, MinimalGroundField) {
  const auto d = parse_document_as<RationalField>(R"({
    "field": {"kind": "rational"},
    "group": {"free_rank": 0},
    "basis": {"dim": 1},
    "product": [[0, 0, 0, "1"]]
  })");
  EXPECT_EQ(d.algebra, truncated_polynomial(1, Q));
  EXPECT_TRUE(d.provenance.is_null());
}

TEST(Document, MatchesRecipeForTruncatedPolynomial) {
  const auto d = parse_document_as<RationalField>(R"({
    "field": {"kind": "rational"},
    "group": {"free_rank": 0, "torsion_orders": []},
    "basis": {"dim": 3},
    "product": [[0,0,0,"1"],[0,1,1,"1"],[0,2,2,"1"],[1,0,1,"1"],[1,1,2,"1"],[2,0,2,"1"]]
  })");
  EXPECT_EQ(d.algebra, truncated_polynomial(3, Q));
  const auto recipe = materialize_recipe("truncated_polynomial", Q, {3});
  EXPECT_EQ(recipe.algebra.structure(), d.algebra.structure());
  EXPECT_EQ(recipe.algebra.alpha(), d.algebra.alpha());
}

TEST(Document, RoundTripIsByteIdentical) {
  for (auto name : kRecipes) {
    if (name == "quantum_plane") continue;
    const auto doc = materialize_recipe(name, Q, {3});
    const auto text = serialize(doc);
    const auto back = parse_document_as<RationalField>(text);
    EXPECT_EQ(back, doc) << name;
    EXPECT_EQ(serialize(back), text) << name;
  }
  const PrimeField f(7);
  const auto qp = materialize_recipe("quantum_plane", f, {});
  const auto text = serialize(qp);
  EXPECT_EQ(serialize(parse_document(text)), text);
  EXPECT_EQ(std::get<Document<PrimeField>>(parse_document(text)), qp);
}

TEST(Document, SerializationLayout) {
  const auto text = serialize(materialize_recipe("truncated_polynomial", Q, {2}));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text.find("[0, 1, 1, \"1\"]"), std::string::npos) << text;
  EXPECT_LT(text.find("\"provenance\""), text.find("\"field\""));
}

TEST(Document, CanonicalScalars) {
  const auto d = parse_document_as<RationalField>(R"({
    "field": {"kind": "rational"},
    "group": {"free_rank": 0},
    "basis": {"dim": 1},
    "product": [[0, 0, 0, "6/8"]]
  })");
  EXPECT_EQ(d.algebra.structure()(0, 0, 0), Rational(3, 4));
  EXPECT_NE(serialize(d).find("\"3/4\""), std::string::npos);

  const auto p = parse_document_as<PrimeField>(R"({
    "field": {"kind": "prime", "p": 7},
    "group": {"free_rank": 0},
    "basis": {"dim": 1},
    "product": [[0, 0, 0, "1/3"], [0, 0, 0, 1]]
  })");
  EXPECT_EQ(p.algebra.structure()(0, 0, 0), PrimeField(7).from_int(6));
}

TEST(Document, RejectsOddProductNamingTriple) {
  const auto text = R"({
    "field": {"kind": "rational"},
    "group": {"free_rank": 0, "torsion_orders": [2]},
    "bicharacter": {"gen_table": [["-1"]]},
    "basis": {"dim": 2, "degrees": [[0], [1]]},
    "product": [[0, 1, 0, "1"]]
  })";
  EXPECT_EQ(section_of(text), "product");
  EXPECT_NE(message_of(text).find("c[0][1][0]"), std::string::npos) << message_of(text);
}

TEST(Document, SyntaxErrorsCarryLineAndColumn) {
  const auto msg = message_of("{\n  \"field\": {\"kind\": \"rational\"},\n  \"group\": ,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("syntax error"), std::string::npos) << msg;
}

TEST(Document, StructuralErrorsNameTheSection) {
  EXPECT_EQ(section_of(R"({"group": {"free_rank": 0}, "basis": {"dim": 1}})"), "field");
  EXPECT_EQ(section_of(R"({"field": {"kind": "real"}, "group": {"free_rank": 0}, "basis": {"dim": 1}})"), "field.kind");
  EXPECT_EQ(section_of(R"({"field": {"kind": "prime", "p": 9}, "group": {"free_rank": 0}, "basis": {"dim": 1}})"),
            "field.p");
  EXPECT_EQ(section_of(R"({"field": {"kind": "rational"}, "group": {"free_rank": 0}, "basis": {"dim": 2},
                          "product": [[0, 2, 0, "1"]]})"),
            "product[0]");
  EXPECT_EQ(section_of(R"({"field": {"kind": "rational"}, "group": {"free_rank": 0}, "basis": {"dim": 1},
                          "product": [[0, 0, 0, "x"]]})"),
            "product[0]");
  EXPECT_EQ(section_of(R"({"field": {"kind": "rational"}, "group": {"free_rank": 0, "torsion_orders": [2]},
                          "bicharacter": {"gen_table": [["2"]]}, "basis": {"dim": 1, "degrees": [[0]]}})"),
            "bicharacter");
  EXPECT_EQ(section_of(R"({"field": {"kind": "rational"}, "group": {"free_rank": 0, "torsion_orders": [2]},
                          "bicharacter": {"gen_table": [["-1"]]}, "basis": {"dim": 2, "degrees": [[0]]}})"),
            "basis.degrees");
  EXPECT_EQ(section_of(R"({"field": {"kind": "rational"}, "group": {"free_rank": 0}, "basis": {"dim": 1},
                          "forms": {"B": {"gram": [["1"]], "companion": "beta"}}})"),
            "forms.B.companion");
  EXPECT_EQ(section_of(R"({"field": {"kind": "rational"}, "group": {"free_rank": 0}, "basis": {"dim": 1},
                          "maps": {"alpha": {"entries": []}}})"),
            "maps.alpha");
}

TEST(Document, MapsAndForms) {
  const auto d = parse_document_as<RationalField>(R"({
    "field": {"kind": "rational"},
    "group": {"free_rank": 0},
    "basis": {"dim": 2},
    "product": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
    "alpha": {"dense": [["1", "0"], ["0", "-1"]]},
    "maps": {"d": {"entries": [[1, 0, "1"]]}},
    "forms": {"B": {"gram": [["0", "1"], ["1", "0"]], "companion": "alpha"}}
  })");
  EXPECT_EQ(d.algebra.alpha().matrix(), Matrix<Rational>::diagonal(Q, {1, -1}));
  EXPECT_EQ(d.map("d").image(1), (Vector<Rational>{Rational(1), Rational(0)}));
  EXPECT_EQ(d.form("B").companion, d.algebra.alpha());
  EXPECT_THROW(d.map("missing"), DocumentError);
  EXPECT_THROW(d.form("missing"), DocumentError);
}

TEST(Document, ShippedDataParses) {
  for (auto file : {"truncated_polynomial3.json", "dt_novikov2.json", "dt_novikov3.json", "dt_novikov3_perturbed.json",
                    "euler_novikov3.json", "hom_quadratic_polynomial3.json", "quantum_plane7.json"}) {
    const auto text = slurp(std::string(COLORHOM_DATA) + "/" + file);
    ASSERT_FALSE(text.empty()) << file;
    EXPECT_NO_THROW(parse_document(text)) << file;
  }
}

TEST(Document, DigestIsStable) {
  EXPECT_EQ(fnv1a_digest(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_digest("a"), "af63dc4c8601ec8c");
  EXPECT_NE(fnv1a_digest("ab"), fnv1a_digest("ba"));
}

TEST(Recipes, ProvenanceAndErrors) {
  const auto d = materialize_recipe("euler_novikov", Q, {4});
  EXPECT_EQ(d.provenance["recipe"], "euler_novikov");
  EXPECT_EQ(d.provenance["n"], 4);
  EXPECT_EQ(d.algebra.dim(), 4u);
  EXPECT_THROW(materialize_recipe("nonexistent", Q), std::invalid_argument);
  EXPECT_THROW(materialize_recipe("quantum_plane", Q), StructuralError);
}
