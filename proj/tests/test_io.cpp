#include "doctest.h"
#include "suspsplit/errors.hpp"
#include "suspsplit/io.hpp"

using namespace suspsplit;
using nlohmann::json;

TEST_CASE("decompose documents") {
  const json doc = json::parse(R"({"schema": 1, "n": 2, "l": 1, "d": 0, "torsion": [[2, 1]],
    "sq2": {"A": [[0]], "B": [[1]]}, "mode": "ops",
    "profile": {"w2": false, "theta": {"case": "bockstein_image", "r": 1}, "tertiary": null}})");
  const ManifoldInput in = parse_decompose(doc);
  CHECK(in.n == 2);
  CHECK(in.T == FinAbGroup::cyclic(PrimePower(2, 1)));
  CHECK(std::holds_alternative<Sq2Matrices>(in.sq2));
  const auto& p = std::get<OperationProfile>(in.top);
  CHECK(p.theta == ThetaCase::BocksteinImage);
  CHECK(p.theta_r == 1);
  CHECK_FALSE(p.tertiary.has_value());
  CHECK(format_result(decide(in)) == "S^3 + P^5(Z/2) + (C_{1}^5(Z/2) u_{iP*teta_1*eta} e^7)\n");
}

TEST_CASE("attach documents") {
  const json doc = json::parse(R"({"n": 3, "l": 0, "d": 1, "torsion": [[3, 1]], "localize": true,
    "coeffs": {"a": [1], "b": [2], "c": [0]}})");
  const ManifoldInput in = parse_decompose(doc);
  const auto& c = std::get<AttachingCoeffs>(in.top);
  CHECK(c.b == std::vector<int>{2});
  const json out = to_json(decide(in));
  CHECK(out["clause"] == "attach");
  CHECK(out["localized"] == true);
  CHECK(out["wedge"]["text"] == "S^5 + P^6(Z/3) + (P^5(Z/3) u_{talpha1} e^9)");
}

TEST_CASE("schema violations") {
  auto rejects = [](const char* text) {
    CHECK_THROWS_AS(parse_decompose(json::parse(text)), SchemaError);
  };
  rejects(R"({"n": 2, "l": 0, "d": 0, "extra": 1, "profile": {}})");
  rejects(R"({"schema": 2, "n": 2, "l": 0, "d": 0, "profile": {}})");
  rejects(R"({"n": 2, "l": 0, "profile": {}})");
  rejects(R"({"n": 2, "l": 0, "d": 0, "torsion": [[4, 1]], "profile": {}})");
  rejects(R"({"n": 2, "l": 0, "d": 0, "profile": {"p1": "trivial"}})");
  rejects(R"({"n": 3, "l": 0, "d": 0, "profile": {"p1": {"case": "nontrivial", "r": 1}}})");
  rejects(R"({"n": 2, "l": 0, "d": 0})");
  rejects(R"({"n": 4, "l": 0, "d": 0, "coeffs": {}})");
  rejects(R"({"n": 2, "l": 0, "d": 0, "profile": {}, "coeffs": {}})");
  rejects(R"({"n": 2, "l": "1", "d": 0, "profile": {}})");
  rejects(R"([1, 2])");
}

TEST_CASE("n = 5 needs no profile") {
  const ManifoldInput in = parse_decompose(json::parse(R"({"n": 5, "l": 0, "d": 0, "localize": true})"));
  CHECK(to_string(decide(in).wedge) == "S^13");
}

TEST_CASE("normalize documents") {
  const json doc = json::parse(R"j({"m": 6, "target": ["P^5(Z/2)", "S^5"], "entries": [[1], [1]]})j");
  const AttachingVector v = parse_normalize(doc);
  REQUIRE(v.target.size() == 2);
  const Normalized n = normalize(to_slots(v));
  const json out = to_json(n);
  CHECK(out["survivor"]["kind"] == "teta");
  CHECK(out["cofiber"]["text"] == "S^5 + (P^5(Z/2) u_{teta_1} e^7)");
  CHECK_THROWS_AS(parse_normalize(json::parse(R"j({"m": 6, "target": ["X^5"], "entries": [[1]]})j")), SchemaError);
  CHECK_THROWS_AS(parse_normalize(json::parse(R"j({"m": 6, "target": [], "entries": [[1]]})j")), SchemaError);
}

TEST_CASE("json mirrors the wedge") {
  const Wedge w({SpaceTerm::sphere(3), SpaceTerm::moore(PrimePower(3, 2), 5)});
  const json j = to_json(w);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][1]["p"] == 3);
  CHECK(j["terms"][1]["r"] == 2);
  CHECK(j["terms"][1]["dim"] == 5);
}
