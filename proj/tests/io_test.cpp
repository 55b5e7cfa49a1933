#include <doctest.h>

#include <sstream>

#include "todorov/error.hpp"
#include "todorov/examples.hpp"
#include "todorov/io.hpp"

using namespace todorov;
using io::Json;

namespace {

Json parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_json(in);
}

std::vector<BranchConfiguration> fixtures() {
  std::vector<BranchConfiguration> out;
  for (int j = 0; j <= 7; ++j) out.push_back(examples::kummer_config(j));
  out.push_back(examples::non_kummer_config(examples::NonKummerVariant::Two));
  out.push_back(examples::non_kummer_config(examples::NonKummerVariant::Three));
  out.push_back(examples::a17_config());
  return out;
}

}  // namespace

TEST_CASE("configurations round-trip and re-validate identically") {
  for (const auto& cfg : fixtures()) {
    const Json j = io::to_json(cfg);
    const auto back = io::config_from_json(parse(j.dump()));
    CHECK(io::to_json(back) == j);
    CHECK(io::to_json(validate(back)) == io::to_json(validate(cfg)));
    CHECK(invariants(back) == invariants(cfg));
  }
}

TEST_CASE("descended configurations round-trip too") {
  auto cfg = examples::a17_config();
  cfg.sd_obstructed = {cfg.lattice["E_4"]};
  const auto back = io::config_from_json(parse(io::to_json(cfg).dump()));
  CHECK(back.sd_obstructed == cfg.sd_obstructed);
  for (const auto& c : full_descent(examples::kummer_config(4)).configurations) {
    const auto again = io::config_from_json(parse(io::to_json(c).dump()));
    CHECK(validate(again).ok());
    CHECK(again.a == c.a);
  }
}

TEST_CASE("output is canonically ordered") {
  const auto text = io::to_json(examples::kummer_config(0)).dump();
  CHECK(text.find("\"A\"") < text.find("\"Bprime\""));
  CHECK(text.find("\"Bprime\"") < text.find("\"inventory\""));
  CHECK(text.find("\"inventory\"") < text.find("\"lattice\""));
  CHECK(io::to_json(examples::a17_config()).dump(2) == io::to_json(examples::a17_config()).dump(2));
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(parse("{not json"), InputError);
  CHECK_THROWS_AS(io::config_from_json(parse("[]")), InputError);
  CHECK_THROWS_AS(io::config_from_json(parse(R"({"lattice": {"basis": ["a"], "gram": [[-2]]}})")), InputError);
  CHECK_THROWS_AS(io::lattice_from_json(parse(R"({"basis": ["a", "b"], "gram": [[-2, 1], [0, -2]]})")), InputError);
  CHECK_THROWS_AS(io::lattice_from_json(parse(R"({"basis": ["a"], "gram": [[-2.5]]})")), InputError);
  CHECK_THROWS_AS(io::lattice_from_json(parse(R"({"basis": [1], "gram": [[-2]]})")), InputError);
  CHECK_THROWS_AS(io::lattice_from_json(parse(R"({"basis": ["a"], "gram": [[18446744073709551615]]})")), InputError);
  CHECK_THROWS_AS(io::config_from_json(parse(
                      R"({"lattice": {"basis": ["a"], "gram": [[-2]]}, "Bprime": [1, 0], "A": []})")),
                  InputError);
  CHECK_THROWS_AS(io::config_from_json(parse(
                      R"({"lattice": {"basis": ["a"], "gram": [[-2]]}, "Bprime": [1], "A": [], "negligible_ok": 1})")),
                  InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/path.json"), InputError);
}

TEST_CASE("plane curves parse, validate and round-trip") {
  const auto c = io::plane_curve_from_json(
      parse(R"({"degree": 6, "points": [{"id": "p", "parent": null, "mult": 2}, {"id": "q", "parent": "p", "mult": 2}]})"));
  CHECK(c.points.size() == 2);
  CHECK(c.points[1].parent == std::optional<std::string>("p"));
  CHECK(io::plane_curve_from_json(io::to_json(c)).points.size() == 2);
  CHECK_THROWS_AS(io::plane_curve_from_json(parse(R"({"degree": 5})")), InputError);
  CHECK_THROWS_AS(io::plane_curve_from_json(parse(R"({"degree": 6, "points": [{"id": "p", "parent": "x", "mult": 2}]})")),
                  InputError);
  CHECK_THROWS_AS(io::plane_curve_from_json(parse(R"({"degree": 6, "points": [{"id": 3, "mult": 2}]})")), InputError);
}

TEST_CASE("graphs and Saint-Donat documents") {
  const auto g = io::graph_from_json(parse(
      R"({"lattice": {"basis": ["a", "b", "c"], "gram": [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]},
          "vertices": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})"));
  CHECK(decompose(g).size() == 1);
  CHECK(decompose(g)[0].type == DynkinType::a(3));

  const auto f = examples::saint_donat_fixture(SDTag::QuadricConeB, 1);
  io::SDDocument doc{f.lattice, f.d, f.sd, {f.sd.gammas[1]}};
  const auto back = io::sd_document_from_json(parse(io::to_json(doc).dump()));
  CHECK(back.d == f.d);
  CHECK(back.sd.tag == SDTag::QuadricConeB);
  CHECK(back.branch_curves == doc.branch_curves);
  CHECK(verify_sd_case(back.lattice, back.d, back.sd));

  Json bad = io::to_json(doc);
  bad["case"] = "iv";
  CHECK_THROWS_AS(io::sd_document_from_json(bad), InputError);
}

TEST_CASE("report serialisation") {
  CHECK(io::to_json(Rational(3, 2)) == Json("3/2"));
  CHECK(io::to_json(Rational(-4)) == Json(-4));

  const Json report = io::to_json(validate(examples::kummer_config(0)));
  CHECK(report["valid"] == true);
  CHECK(report["nef_certificate"] == "partial");
  CHECK(report["evenness"]["coefficients"] == Json::array({1}));

  const Json inv = io::to_json(invariants(examples::kunev_config()));
  CHECK(inv == Json{{"q", 0}, {"p_g", 1}, {"K2", 1}, {"chi", 2}});

  const auto step = descent_step(examples::a17_config()).first;
  const Json s = io::to_json(step);
  CHECK(s["K2"] == 1);
  CHECK(s["K2_before"] == 2);
  CHECK(s["type"] == "A17");

  const auto cfg = examples::kunev_config();
  const Json cubic = io::to_json(cubic_splitting_certificate(cfg, 3 * cfg.bp));
  CHECK(cubic["ok"] == true);
  CHECK(cubic["J_dot_A"].size() == 9);
}
