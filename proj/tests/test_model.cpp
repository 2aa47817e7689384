#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <string>

#include "gtt/ast.hpp"
#include "gtt/errors.hpp"
#include "gtt/model.hpp"
#include "gtt/parse.hpp"

using namespace gtt;

namespace {

std::string model_path(const char* name) {
  return std::string(GTT_MODELS_DIR) + "/" + name;
}

bool ev(const FiniteModel& m, const std::string& txt) {
  Store st;
  return eval_object(st, m, parse_sentence(st, txt));
}

}  // namespace

TEST_CASE("bundled models load with the documented shapes") {
  auto unit = FiniteModel::load_file(model_path("unit.json"), std::nullopt);
  CHECK(unit.elements.size() == 1);
  CHECK(unit.preds.size() == 1);
  CHECK(unit.family.empty());

  auto pair = FiniteModel::load_file(model_path("pair.json"), std::nullopt);
  CHECK(pair.elements.size() == 2);
  CHECK(pair.preds.size() == 2);

  auto triple = FiniteModel::load_file(model_path("triple.json"), std::nullopt);
  CHECK(triple.elements.size() == 3);
  REQUIRE(triple.pred_index("R") != -1);
  CHECK(triple.preds[triple.pred_index("R")].arity == 2);
}

TEST_CASE("classical evaluation over the bundled models") {
  auto pair = FiniteModel::load_file(model_path("pair.json"), std::nullopt);
  CHECK(ev(pair, "P(e0)"));
  CHECK(!ev(pair, "P(e1)"));
  CHECK(ev(pair, "Q(e1)"));
  CHECK(ev(pair, "P(e0) & ~P(e1)"));
  CHECK(ev(pair, "P(e1) -> P(e0)"));
  CHECK(!ev(pair, "P(e0) <-> P(e1)"));
  CHECK(ev(pair, "forall x. Q(x)"));
  CHECK(!ev(pair, "forall x. P(x)"));
  CHECK(ev(pair, "exists x. P(x)"));
  CHECK(!ev(pair, "exists x. ~Q(x)"));

  auto triple = FiniteModel::load_file(model_path("triple.json"), std::nullopt);
  CHECK(ev(triple, "R(e0, e1)"));
  CHECK(!ev(triple, "R(e1, e0)"));
  CHECK(ev(triple, "exists x. R(x, x)"));
  CHECK(ev(triple, "forall x. exists y. R(x, y)"));
  CHECK(!ev(triple, "exists y. forall x. R(x, y)"));
}

TEST_CASE("truth mentions are rejected by object evaluation") {
  auto unit = FiniteModel::load_file(model_path("unit.json"), std::nullopt);
  Store st;
  CHECK_THROWS_AS(eval_object(st, unit, parse_sentence(st, "T(#2)")), InputError);
  CHECK_THROWS_AS(eval_object(st, unit, parse_sentence(st, "P(e0) & T(@P(e0))")), InputError);
  CHECK_THROWS_AS(eval_object(st, unit, parse_sentence(st, "forall x. T(x)")), InputError);
}

TEST_CASE("vocabulary mismatches are input errors") {
  auto unit = FiniteModel::load_file(model_path("unit.json"), std::nullopt);
  Store st;
  CHECK_THROWS_AS(eval_object(st, unit, parse_sentence(st, "Z(e0)")), InputError);
  CHECK_THROWS_AS(eval_object(st, unit, parse_sentence(st, "P(e9)")), InputError);
  CHECK_THROWS_AS(eval_object(st, unit, parse_sentence(st, "P(e0, e0)")), InputError);
}

TEST_CASE("model JSON validation rejects malformed definitions") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS(FiniteModel::from_json_text(text, std::nullopt), InputError);
  };
  bad("not json");
  bad("[]");
  bad(R"({"elements": [], "predicates": []})");
  bad(R"({"elements": ["e0", "e0"], "predicates": [{"name": "P", "arity": 1}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "T", "arity": 1}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "forall", "arity": 1}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "P", "arity": 0}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "P", "arity": 5}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "P", "arity": 1}, {"name": "P", "arity": 1}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "P", "arity": 1, "extension": [["e1"]]}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "P", "arity": 2, "extension": [["e0"]]}]})");
  bad(R"({"elements": ["e0"], "predicates": [{"name": "P", "arity": 1, "domains": [[]]}]})");
  bad(R"({"elements": ["e0", "e1"],
          "predicates": [{"name": "P", "arity": 1, "domains": [["e0"]], "extension": [["e1"]]}]})");
}

TEST_CASE("per-argument domains restrict quantified variables") {
  auto m = FiniteModel::from_json_text(
      R"({"elements": ["a", "b", "c"],
          "predicates": [{"name": "P", "arity": 1, "domains": [["a", "b"]], "extension": [["a"], ["b"]]}]})",
      std::nullopt);
  Store st;
  NodeId q = parse_sentence(st, "forall x. P(x)");
  // c is outside P's domain, so the quantifier never sees it
  CHECK(var_domain(st, m, st.node(q).b, st.node(q).a).size() == 2);
  CHECK(eval_object(st, m, q));
  // unconstrained variables range over every element
  NodeId open_body = parse_sentence(st, "forall y. exists x. P(x)");
  CHECK(var_domain(st, m, st.node(open_body).b, st.node(open_body).a).size() == 3);
}

TEST_CASE("surrogate family synthesizes the doubling relation") {
  auto m = FiniteModel::load_file(model_path("double.json"), 4);
  CHECK(m.family == "x_eq_2y");
  CHECK(m.elements.size() == 5);
  REQUIRE(m.pred_index("R") == 0);
  CHECK(ev(m, "R(n4, n2)"));
  CHECK(ev(m, "R(n2, n1)"));
  CHECK(ev(m, "R(n0, n0)"));
  CHECK(!ev(m, "R(n2, n4)"));
  CHECK(!ev(m, "R(n3, n1)"));
  // every y up to bound/2 has a double; nothing above it does
  CHECK(ev(m, "exists x. R(x, n2)"));
  CHECK(!ev(m, "exists x. R(x, n3)"));
  CHECK(!ev(m, "forall x. exists y. R(x, y)"));
  CHECK(ev(m, "forall x. exists y. ~R(x, y)"));
}

TEST_CASE("surrogate bound and family must agree") {
  CHECK_THROWS_AS(FiniteModel::load_file(model_path("double.json"), std::nullopt), InputError);
  CHECK_THROWS_AS(FiniteModel::load_file(model_path("unit.json"), 4), InputError);
  CHECK_THROWS_AS(FiniteModel::from_json_text(R"({"family": "x_eq_3y"})", 4), InputError);
  CHECK_THROWS_AS(FiniteModel::from_json_text(R"({"family": "x_eq_2y"})", 0), InputError);
}
