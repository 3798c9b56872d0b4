#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "colorlie/errors.hpp"
#include "colorlie/io.hpp"
#include "support.hpp"

using namespace colorlie;
using io::Json;

namespace {

Json reparse(const Json& j) {
  std::istringstream in(j.dump());
  return io::read_json(in, "test");
}

bool same_algebra(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.dim() != b.dim() || a.degrees() != b.degrees() || a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_bracket(i, j) != b.basis_bracket(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("scalars, degrees and matrices") {
  Scalar s(Rational(-3, 4), Rational(5));
  CHECK(io::scalar_pair(s) == Json::array({"-3/4", "5"}));
  CHECK(io::parse_scalar(io::scalar_pair(s)) == s);
  CHECK(io::parse_scalar(io::scalar_object(s)) == s);
  CHECK(io::parse_scalar(Json("7/2")) == Scalar(Rational(7, 2)));
  CHECK_THROWS_AS(io::parse_scalar(Json(0.5)), ParseError);
  CHECK_THROWS_AS(io::parse_scalar(Json::array({"1"})), ParseError);
  CHECK(io::parse_degree(io::degree_json(Degree(1, 0))) == Degree(1, 0));
  CHECK_THROWS_AS(io::parse_degree(Json::array({2, 0})), ParseError);
  Matrix m(2, 3);
  m(0, 2) = Scalar::i();
  m(1, 0) = Scalar(Rational(1, 3));
  CHECK(io::parse_matrix(io::matrix_json(m), 2, 3) == m);
  CHECK_THROWS_AS(io::parse_matrix(io::matrix_json(m), 3, 2), ParseError);
}

TEST_CASE("algebra documents round-trip") {
  const auto& golden = testing::so4222();
  Json doc = io::algebra_to_json(*golden.algebra, golden.fixture.cartan_hint);
  Json again = reparse(doc);
  CHECK(again == doc);
  io::AlgebraInput in = io::algebra_from_json(again);
  CHECK(same_algebra(*in.algebra, *golden.algebra));
  REQUIRE(in.cartan_hint);
  CHECK(*in.cartan_hint == golden.fixture.cartan_hint);
  CHECK(io::algebra_to_json(*in.algebra, in.cartan_hint).dump() == doc.dump());
  for (const auto& rec : doc["structure"]) CHECK(rec["i"].get<std::size_t>() < rec["j"].get<std::size_t>());
}

TEST_CASE("realization documents round-trip") {
  const auto& real = testing::so4211().fixture.realization;
  Json doc = io::realization_to_json(real);
  MatrixRealization back = io::realization_from_json(reparse(doc));
  CHECK(back.block_sizes == real.block_sizes);
  CHECK(back.block_degrees == real.block_degrees);
  CHECK(back.degrees == real.degrees);
  CHECK(back.labels == real.labels);
  CHECK(back.matrices == real.matrices);
  doc.erase("degrees");
  CHECK(io::realization_from_json(doc).degrees == real.degrees);
  io::AlgebraInput in = io::algebra_from_json(doc);
  CHECK(in.realization);
  CHECK(same_algebra(*in.algebra, *testing::so4211().algebra));
}

TEST_CASE("representation documents round-trip") {
  const auto& golden = testing::so4222();
  Representation rep = defining_representation(golden.algebra, golden.fixture.realization);
  Json doc = io::representation_to_json(rep, "#algebra");
  Json again = reparse(doc);
  io::AlgebraInput a = io::algebra_from_json(again["algebra"]);
  Representation back = io::representation_from_json(again, a.algebra);
  CHECK(back.matrices() == rep.matrices());
  CHECK(back.grading() == rep.grading());
  CHECK(!doc.contains("tensorConvention"));
  Representation sq = tensor_product(rep, rep);
  Json sdoc = io::representation_to_json(sq, "so4222.json", std::nullopt, false);
  CHECK(sdoc["algebraRef"] == "so4222.json");
  CHECK(!sdoc.contains("algebra"));
  CHECK(sdoc.contains("tensorConvention"));
  CHECK(io::representation_from_json(sdoc, golden.algebra).uses_tensor_convention());
}

TEST_CASE("malformed algebra documents") {
  auto base = [] {
    return Json::parse(R"({"dim":2,"degrees":[[0,0],[0,1]],"structure":[{"i":0,"j":1,"k":1,"re":"1","im":"0"}]})");
  };
  CHECK(io::algebra_from_json(base()).algebra->dim() == 2);
  auto broken = [&](auto&& edit) {
    Json j = base();
    edit(j);
    CHECK_THROWS_AS(io::algebra_from_json(j), ParseError);
  };
  broken([](Json& j) { j.erase("degrees"); });
  broken([](Json& j) { j["degrees"] = Json::array({Json::array({0, 0})}); });
  broken([](Json& j) { j["structure"][0]["k"] = 5; });
  broken([](Json& j) { j["structure"][0]["re"] = "x"; });
  broken([](Json& j) { j["structure"].push_back(j["structure"][0]); });
  broken([](Json& j) { j["labels"] = Json::array({"a"}); });
  broken([](Json& j) { j["dim"] = -1; });
  std::istringstream garbage("{\"dim\": ");
  CHECK_THROWS_AS(io::read_json(garbage, "garbage"), ParseError);
}

TEST_CASE("non-closed realization raises a domain error, not a parse error") {
  auto gl = gl_graded({{Degree(0, 0), 2}});
  gl.matrices = {gl.matrices[1], gl.matrices[2]};
  gl.degrees = {gl.degrees[1], gl.degrees[2]};
  gl.labels = {gl.labels[1], gl.labels[2]};
  CHECK_THROWS_AS(io::algebra_from_json(io::realization_to_json(gl)), DomainError);
}

TEST_CASE("reports use the documented fields and survive reparsing") {
  const auto& golden = testing::so4222();
  WeylGroup w = weyl_group(golden.roots);
  Json r = io::root_report(golden.roots, &w);
  CHECK(reparse(r) == r);
  CHECK(r["roots"].size() == 40);
  CHECK(r["dynkinType"] == "D5");
  CHECK(r["weylOrder"] == 1920);
  CHECK(r["nodeDegrees"].size() == 5);
  CHECK(r["cartanMatrix"].size() == 5);
  for (const auto& root : r["roots"]) {
    Vector alpha = io::parse_vector(root["vector"], 5);
    CHECK(golden.roots.find(alpha));
    CHECK(root["dims"].size() == 1);
    CHECK(root["degrees"].size() == 1);
  }
  Json r2 = io::root_report(testing::so4211().roots, nullptr);
  CHECK(r2["dynkinType"].is_null());
  CHECK(r2["selfCentralizing"] == false);
  CHECK(r2["zeroPart"].size() == 1);
  CHECK(r2["zeroPart"][0]["degree"] == "(0,1)");

  Representation rep = defining_representation(golden.algebra, golden.fixture.realization);
  Json d = io::decomposition_report(decompose(rep, golden.roots), false);
  CHECK(reparse(d) == d);
  REQUIRE(d["components"].size() == 1);
  const auto& c = d["components"][0];
  CHECK(c["dim"] == 10);
  CHECK(io::parse_scalar(c["casimirValue"]) == Scalar(Rational(9, 16)));
  CHECK(io::parse_vector(c["highestWeight"], 5) == testing::rational_vector({1, 0, 0, 0, 0}));
  CHECK(c["degreeOfHighestWeightSpace"] == "(0,0)");
  CHECK(!d.contains("tensorConvention"));

  Json v = io::validation_report(*golden.algebra, check_axioms(*golden.algebra), is_basic(*golden.algebra),
                                 std::nullopt);
  CHECK(v["axioms"]["pass"] == true);
  CHECK(v["basic"]["basic"] == true);
  CHECK(v["degreeDims"]["(0,0)"] == 9);
}
