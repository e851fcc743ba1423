#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kleinian/discreteness.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/expr.hpp"
#include "kleinian/json_io.hpp"
#include "kleinian/realization.hpp"

using namespace kleinian;

TEST_CASE("expressions") {
  CHECK(evaluate_expression("-3") == -3.0);
  CHECK(evaluate_expression("sqrt5-1") == doctest::Approx(std::sqrt(5.0) - 1));
  CHECK(evaluate_expression("(sqrt5-1)/2") == doctest::Approx(0.6180339887498949));
  CHECK(evaluate_expression("-4*sin(pi/7)^2") ==
        doctest::Approx(-4 * std::pow(std::sin(std::numbers::pi / 7), 2)));
  CHECK(evaluate_expression("2^3^2") == 512.0);
  CHECK(evaluate_expression("-2^2") == -4.0);
  CHECK(evaluate_expression(" 1.5e-3 ") == 1.5e-3);
  CHECK(evaluate_expression("sqrt(2)*sqrt(2)") == doctest::Approx(2.0));
  CHECK(evaluate_expression("cos(0)") == 1.0);

  CHECK_THROWS_AS(evaluate_expression(""), ExpressionError);
  CHECK_THROWS_AS(evaluate_expression("1+"), ExpressionError);
  CHECK_THROWS_AS(evaluate_expression("(1"), ExpressionError);
  CHECK_THROWS_AS(evaluate_expression("foo(1)"), ExpressionError);
  CHECK_THROWS_AS(evaluate_expression("1 2"), ExpressionError);
}

TEST_CASE("parameters and matrices round trip") {
  const Parameters p{-3.0, std::sqrt(5.0) - 1, 0.1 + 0.2};
  const auto back = parameters_from_json(json::parse(dump_canonical(to_json(p))));
  CHECK(back.beta == p.beta);
  CHECK(back.beta_prime == p.beta_prime);
  CHECK(back.gamma == p.gamma);

  const auto pair = realize({-3.0, 2.0, -5.5});
  const auto m = mat_from_json(json::parse(dump_canonical(to_json(pair.G))));
  CHECK(distance(m, pair.G) == 0.0);
  CHECK(to_json(pair.F).size() == 4);
  CHECK(to_json(pair.F)[0].size() == 2);
}

TEST_CASE("canonical output") {
  const auto r = classify({-3.0, -3.0, -4.0});
  const auto a = dump_canonical(to_json(r)), b = dump_canonical(to_json(classify({-3.0, -3.0, -4.0})));
  CHECK(a == b);
  const auto j = json::parse(a);
  CHECK(j["verdict"] == "DiscreteInD");
  CHECK(j["matches"][0]["row"] == "1");
  CHECK(j["matches"][0]["group"]["exponents"] == json({"fin:3", "fin:3", "inf"}));
  // keys are sorted
  CHECK(a.find("\"matches\"") < a.find("\"verdict\""));

  const auto pres = to_json(build(Schema::GT, {ExtExp::fin(5), ExtExp::inf(), ExtExp::bar_inf()}));
  CHECK(pres["generators"] == json({"f", "g"}));
  CHECK(pres["relators"].size() == 2);
  CHECK(pres["relators"][1]["exponent"] == "inf");
  CHECK(pres["form"] == "kleinian");
}

TEST_CASE("graph JSON") {
  const auto j = json::parse(R"({
    "vertices": [{"id": 0, "fat": false}, {"id": 1, "fat": false}],
    "edges": [{"a": 0, "b": 1, "label": 2}, {"a": 0, "b": 1, "label": 2},
              {"a": 0, "b": 1, "label": 5}]})");
  const auto g = graph_from_json(j);
  CHECK(g.edges.size() == 3);
  CHECK(g.edges[2].label == ExtExp::fin(5));
  CHECK_NOTHROW(g.validate());

  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": []})")), GraphError);
  CHECK_THROWS_AS(graph_from_json(json::parse(
                      R"({"vertices": [], "edges": [{"a": 0, "b": 1, "label": "x"}]})")),
                  GraphError);
  CHECK_THROWS_AS(graph_from_json(json::parse(
                      R"({"vertices": [], "edges": [{"a": 0, "b": 1, "label": 0}]})")),
                  GraphError);
}
