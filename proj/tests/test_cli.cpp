#include <doctest.h>

#include "cli/expr.hpp"
#include "cli/report.hpp"
#include "cli/scenario.hpp"

using namespace qdr;
using namespace qdr::cli;

namespace {

ExprContext flat_context(int n) {
  ExprContext ctx;
  ctx.dim = 2 * n;
  ctx.w = standard_symplectic(n).w;
  return ctx;
}

std::string eval(const std::string& text, int n = 1) {
  const auto e = parse_expression(text, flat_context(n));
  return format_form(e.value, e.uses_dx);
}

Report run(const std::string& json) { return run_scenario(parse_scenario(json)); }

}  // namespace

TEST_CASE("expression grammar") {
  CHECK(eval("e[1] ^h e[2]") == "e1^e2 + (-1)*h");
  CHECK(eval("e[1] ^ e[2]") == "e1^e2");
  CHECK(eval("e[1] * e[2]") == eval("e[1] ^ e[2]"));
  CHECK(eval("dx[1] ^h dx[2]") == "dx1^dx2 + (-1)*h");
  CHECK(eval("(e[1]^e[2]) ^h (e[1]^e[2])") == "2*h*e1^e2 + (-1)*h^2");
  CHECK(eval("h^2 - h^2") == "0");
  CHECK(eval("3/6 * e[2]") == "(1/2)*e2");
  CHECK(eval("-e[1] + e[1]") == "0");
  const auto x = parse_expression("x[1]*dx[2]", flat_context(1));
  CHECK(x.uses_dx);
  CHECK(x.value == dx_form(2, {2}, fn_x(1)));
  const auto im = parse_expression("i*i", flat_context(1));
  CHECK(im.value == FieldForm::constant(2, Fn(-1)));
}

TEST_CASE("parse errors carry a column") {
  try {
    parse_expression("e[1] + + ", flat_context(1));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  try {
    parse_expression("e[3]", flat_context(1));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(parse_expression("mode(1,0)", flat_context(1)), ParseError);
  CHECK_THROWS_AS(parse_expression("e[1] )", flat_context(1)), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0", flat_context(1)), ParseError);
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW(parse_scenario(R"({"model": "flat", "dim": 2})"));
  CHECK_THROWS_AS(parse_scenario(R"({"model": "flat", "dim": 2, "colour": 1})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "klein_bottle"})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "flat", "dim": 3})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "flat", "dim": 10})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "heisenberg", "n": 2})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "custom", "omega": [["0","1"],["1","0"]]})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "custom", "omega": [["0","0"],["0","0"]]})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "flat", "tasks": [{"task": "product", "exp": "1"}]})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "flat", "tasks": [{"task": "nonexistent"}]})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "torus", "truncation": -1})"), ScenarioError);
  const Scenario s = parse_scenario(R"({"model": "custom", "omega": [["0","1/2"],["-1/2","0"]]})");
  CHECK(s.dim == 2);
  CHECK(build_model(s).w.constant_value()(0, 1) == -2);
}

TEST_CASE("syntax errors report line and column") {
  try {
    parse_scenario("{\n  \"model\": \"flat\",\n  \"dim\": ,\n}");
    FAIL("expected a scenario error");
  } catch (const ScenarioError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
  }
}

TEST_CASE("running scenarios") {
  const Report empty = run(R"({"model": "flat", "tasks": []})");
  CHECK(empty.tasks.empty());
  CHECK(empty.ok());

  const Report prod = run(R"({"model": "flat", "dim": 2, "tasks": [{"task": "product", "expr": "e[1] ^h e[2]"}]})");
  REQUIRE(prod.tasks.size() == 1);
  CHECK(prod.tasks[0].values["result"]["text"] == "e1^e2 + (-1)*h");
  CHECK(emit_text(prod).find("e1^e2 + (-1)*h") != std::string::npos);

  const Report stokes = run(R"({"model": "torus", "n": 1, "truncation": 2, "seed": 7, "tasks": [{"task": "stokes"}]})");
  REQUIRE(stokes.tasks.size() == 1);
  CHECK(stokes.tasks[0].pass == true);

  const Report ops = run(R"({"model": "flat", "n": 1, "tasks": [
      {"task": "operator", "op": "Lh", "expr": "e[1]^e[2]"},
      {"task": "operator", "op": "dh", "expr": "x[1]*dx[2]"},
      {"task": "power", "expr": "e[1]^e[2] - h", "k": 2},
      {"task": "spectrum", "n": 1, "parity": "even"},
      {"task": "cpn_table", "n": 2}]})");
  REQUIRE(ops.tasks.size() == 5);
  CHECK(ops.tasks[0].values["result"]["text"] == "2*h*e1^e2 + (-1)*h^2");
  CHECK(ops.tasks[1].values["result"]["text"] == "dx1^dx2 + h");
  CHECK(ops.tasks[2].values["result"]["text"] == "0");
  CHECK(ops.tasks[3].values["char_poly"] == "lambda^2 - 2*lambda + 1");
  CHECK(ops.tasks[3].pass == true);
  CHECK(ops.tasks[4].values["lambda"] == "-2");

  const Report integral = run(R"J({"model": "torus", "n": 1, "tasks": [
      {"task": "integral", "expr": "1 + 3*h*dx[1]^dx[2] + mode(1,0)"}]})J");
  CHECK(integral.tasks[0].values["integral"] == "1 + 3*h");

  CHECK_THROWS_AS(run(R"({"model": "flat", "tasks": [{"task": "integral", "expr": "1"}]})"), ScenarioError);
}

TEST_CASE("check suites from scenarios and failures propagate") {
  const Report r = run(R"({"model": "flat", "n": 1, "tasks": [{"task": "lefschetz"}, {"task": "dh_complex"}]})");
  REQUIRE(r.tasks.size() == 2);
  CHECK(r.tasks[0].pass == true);
  CHECK(r.tasks[1].pass == false);  // the Leibniz rule for the pinned pair
  CHECK_FALSE(r.ok());
  CHECK(r.failures() == 1);
  const std::string text = emit_text(r);
  CHECK(text.rfind("FAIL: 2 task(s), 1 of 2 checks passed") != std::string::npos);
}

TEST_CASE("machine reports: exact strings, round trip and determinism") {
  const std::string scenario = R"({"model": "flat", "n": 1, "seed": 5, "tasks": [
      {"task": "product", "expr": "(e[1]^e[2]) ^h (e[1]^e[2]) + 3/2"},
      {"task": "cpn_table", "n": 1},
      {"task": "moyal"}]})";
  const Report a = run(scenario), b = run(scenario);
  const std::string ma = emit_machine(a);
  CHECK(ma == emit_machine(b));

  const Json j = Json::parse(ma);
  CHECK(j["format"] == "qdr-report/1");
  CHECK(to_json(report_from_json(j)) == j);

  const Json& form = j["tasks"][0]["values"]["result"];
  CHECK(form_from_json(form) ==
        parse_expression("(e[1]^e[2]) ^h (e[1]^e[2]) + 3/2", flat_context(1)).value);
  // 3/2 - h^2 on the unit blade: coefficients are exact strings
  CHECK(form["terms"].back()["h"] == Json::parse(R"([[0, "3/2"], [2, "-1"]])"));

  // omega ^_h omega = 2h omega - h^2 in the ring basis
  const Json& table = j["tasks"][1]["values"]["table"]["w^1 * w^1"];
  CHECK(table["w^1"] == Json::parse(R"([[1, "2"]])"));
  CHECK(table["w^0"] == Json::parse(R"([[2, "-1"]])"));

  const Laurent p = hpow(1, 2) - hpow(2);
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CHECK(laurent_to_json(Laurent(Rational(3, 2))) == Json::parse(R"([[0, "3/2"]])"));
}

TEST_CASE("chern tasks") {
  const Report r = run(R"({"model": "flat", "n": 1, "tasks": [{"task": "chern", "theta": "x[1]*dx[2]"}]})");
  REQUIRE(r.tasks.size() == 1);
  CHECK(r.tasks[0].values["curvature"][0][0] == "dx1^dx2 + h");
  CHECK(r.tasks[0].pass == true);
  CHECK_THROWS_AS(run(R"({"model": "flat", "n": 1, "tasks": [{"task": "chern", "theta": "x[1]"}]})"), ScenarioError);
}

TEST_CASE("dimension cap from the environment") {
  CHECK(max_dim_from_env() >= 1);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "flat", "n": 2})", 2), ScenarioError);
}
