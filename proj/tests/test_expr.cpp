#include <gtest/gtest.h>

#include "cardalg/expr.hpp"
#include "cardalg/trace.hpp"
#include "oracles.hpp"

using namespace cardalg;

namespace {

std::vector<std::string> rules_of(const DerivationTrace& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps) out.push_back(s.rule_id);
  return out;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_expr("aleph(0) + 5"),
            Expr::make_add(Expr::make_aleph(Ordinal()), Expr::make_number(5)));
  EXPECT_EQ(parse_expr("card_poly(aleph(0), 1)"),
            Expr::make_call("card_poly", {Expr::make_aleph(Ordinal()), Expr::make_number(1)}));
  // 2^k over an infinite literal reads as the power-set term
  EXPECT_EQ(as_literal(parse_expr("2^aleph(w)")), Cardinal::powset(Cardinal::aleph(Ordinal::omega())));
}

TEST(Parse, PrecedenceAndAssociativity) {
  const Expr two = Expr::make_number(2), three = Expr::make_number(3), four = Expr::make_number(4);
  EXPECT_EQ(parse_expr("2 + 3 * 4"), Expr::make_add(two, Expr::make_mul(three, four)));
  EXPECT_EQ(parse_expr("2 * 3 ^ 4"), Expr::make_mul(two, Expr::make_pow(three, four)));
  EXPECT_EQ(parse_expr("2 ^ 3 ^ 4"), Expr::make_pow(two, Expr::make_pow(three, four)));
  EXPECT_EQ(parse_expr("(2 ^ 3) ^ 4"), Expr::make_pow(Expr::make_pow(two, three), four));
  EXPECT_EQ(parse_expr("2 + 3 + 4"), Expr::make_add(Expr::make_add(two, three), four));
}

TEST(Parse, ErrorsCarryOffsetAndExpected) {
  try {
    parse_expr("aleph(0) + ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 11u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse_expr("aleph(0) $ 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9u);
  }
  EXPECT_THROW(parse_expr("card_powser(1, 2)"), ParseError);  // arity
  EXPECT_THROW(parse_expr("nosuch(1)"), ParseError);
  EXPECT_THROW(parse_expr("aleph(w+)"), ParseError);
}

TEST(Render, RoundTripsCanonicalText) {
  for (const char* s : {"5", "aleph(0)", "aleph(w+1)", "2^aleph(0)", "exp(aleph(1), aleph(0))",
                        "aleph(0) + 5", "(aleph(0) + 5) * 2", "2^(3^4)", "card_poly(aleph(0), 1)",
                        "max(2^aleph(0), aleph(2))", "between(aleph(0), aleph(2))"}) {
    const Expr e = parse_expr(s);
    EXPECT_EQ(parse_expr(render(e)), e) << s;
    EXPECT_EQ(render(parse_expr(render(e))), render(e)) << s;
  }
}

TEST(RenderProperty, GeneratedAstsRoundTrip) {
  oracle::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = parse_expr(oracle::render(oracle::random_node(rng, 3)));
    EXPECT_EQ(parse_expr(render(e)), e) << render(e);
  }
}

TEST(Evaluate, AlephZeroSquared) {
  const Evaluation ev = evaluate("aleph(0) * aleph(0)", Mode::ZFC);
  EXPECT_EQ(ev.value, Cardinal::aleph(0ul));
  EXPECT_EQ(rules_of(ev.trace), std::vector<std::string>{"R-IDEM"});
}

TEST(Evaluate, ComplexPowerSeries) {
  const Evaluation ev = evaluate("card_powser(2^aleph(0))", Mode::ZFC);
  EXPECT_EQ(ev.trace.result, "2^aleph(0)");
  EXPECT_EQ(rules_of(ev.trace).front(), "R-PS");
}

TEST(Evaluate, AlephOmegaPowerSeriesByMode) {
  const Evaluation zfc = evaluate("card_powser(aleph(w))", Mode::ZFC);
  EXPECT_EQ(rules_of(zfc.trace), (std::vector<std::string>{"R-PS", "R-EXP-SMALL", "R-KONIG"}));
  EXPECT_EQ(describe_result(zfc.trace), "exp(aleph(w), aleph(0)) in (aleph(w), 2^aleph(w)]");
  const Evaluation gch = evaluate("card_powser(aleph(w))", Mode::GCH);
  EXPECT_EQ(gch.trace.result, "aleph(w+1)");
  EXPECT_EQ(rules_of(gch.trace), (std::vector<std::string>{"R-PS", "R-GCH-EXP"}));
}

TEST(Evaluate, ErrorsNameTheSubexpression) {
  try {
    evaluate("aleph(1) + card_poly(1, aleph(0))", Mode::ZFC);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.subexpression(), "card_poly(1, aleph(0))");
  }
  EXPECT_THROW(evaluate("card_monoid_ring(5, 0)", Mode::GCH), EvalError);
}

TEST(Evaluate, UnknownOrderRendersBothCandidates) {
  const Evaluation ev = evaluate("aleph(2) * 2^aleph(0)", Mode::ZFC);
  EXPECT_EQ(ev.value.kind(), Cardinal::Kind::Max);
  EXPECT_NE(describe_result(ev.trace).find("unknown"), std::string::npos);
  EXPECT_EQ(ev.trace.candidates.size(), 2u);
}

TEST(Trace, JsonSchema) {
  const auto j = to_json(evaluate("card_powser(aleph(w))", Mode::ZFC).trace);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["mode"], "zfc");
  EXPECT_EQ(j["input"], "card_powser(aleph(w))");
  ASSERT_TRUE(j["bounds"].is_object());
  EXPECT_EQ(j["bounds"]["lower"], "aleph(w)");
  EXPECT_EQ(j["bounds"]["lower_strict"], true);
  EXPECT_EQ(j["bounds"]["upper"], "2^aleph(w)");
  for (const auto& s : j["steps"])
    for (const char* key : {"rule_id", "statement", "before", "after", "redex", "contractum", "note"})
      EXPECT_TRUE(s.contains(key)) << key;
}

TEST(Trace, ReplayRejectsTampering) {
  DerivationTrace t = evaluate("(aleph(0) + 3) * aleph(2)", Mode::ZFC).trace;
  std::string why;
  ASSERT_TRUE(replay(t, &why)) << why;
  DerivationTrace bad = t;
  bad.steps[0].rule_id = "R-MUL";
  EXPECT_FALSE(replay(bad, &why));
  bad = t;
  bad.result = "aleph(3)";
  EXPECT_FALSE(replay(bad, &why));
  bad = t;
  bad.steps.pop_back();
  EXPECT_FALSE(replay(bad, &why));
}

TEST(EvaluateProperty, GchAgreesWithOracle) {
  oracle::Rng rng(32);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const oracle::Node n = oracle::random_node(rng, 3);
    const std::string text = oracle::render(n);
    if (!oracle::domain_ok(n)) {
      EXPECT_THROW(evaluate(text, Mode::GCH), EvalError) << text;
      continue;
    }
    const Evaluation ev = evaluate(text, Mode::GCH);
    EXPECT_EQ(ev.trace.result, oracle::gch_eval(n).to_string()) << text;
    ++checked;
  }
  EXPECT_GT(checked, 2000);
}

TEST(EvaluateProperty, TracesReplayAndUseRegisteredRules) {
  oracle::Rng rng(33);
  for (int i = 0; i < 1500; ++i) {
    const oracle::Node n = oracle::random_node(rng, 3);
    if (!oracle::domain_ok(n)) continue;
    for (Mode m : {Mode::ZFC, Mode::GCH}) {
      const Evaluation ev = evaluate(oracle::render(n), m);
      std::string why;
      EXPECT_TRUE(replay(ev.trace, &why)) << oracle::render(n) << ": " << why;
      for (const auto& s : ev.trace.steps) EXPECT_NE(find_rule(s.rule_id), nullptr) << s.rule_id;
      EXPECT_TRUE(is_normal(ev.value, m)) << ev.value.to_string();
    }
  }
}

TEST(EvaluateProperty, Deterministic) {
  oracle::Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    const oracle::Node n = oracle::random_node(rng, 3);
    if (!oracle::domain_ok(n)) continue;
    const std::string text = oracle::render(n);
    EXPECT_EQ(to_json(evaluate(text, Mode::ZFC).trace).dump(), to_json(evaluate(text, Mode::ZFC).trace).dump());
  }
}

TEST(RuleTable, ContainsPublicIds) {
  for (const char* id : {"R-ADD", "R-MUL", "R-EXP-SQUEEZE", "R-EXP-SMALL", "R-CANTOR", "R-IDEM", "R-KONIG",
                         "R-GCH-EXP", "L1-SUM", "L1-PROD", "L2-SUM-BOUND", "L-PROD-BOUND", "L4-FIN", "L3-DSUM",
                         "T1-MONOID", "C-POLY", "R-PS", "L5-FRAC", "L6-ZERODIM"}) {
    const RuleInfo* r = find_rule(id);
    ASSERT_NE(r, nullptr) << id;
    EXPECT_FALSE(r->statement.empty()) << id;
  }
  EXPECT_EQ(find_rule("R-NOPE"), nullptr);
}
