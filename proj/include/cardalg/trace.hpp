#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cardalg/cardinal.hpp"
#include "cardalg/expr.hpp"

namespace cardalg {

/// One registered rewrite rule. IDs are stable public identifiers.
struct RuleInfo {
  std::string_view id;
  std::string_view statement;
};

const std::vector<RuleInfo>& rule_table();
const RuleInfo* find_rule(std::string_view id);

/// A dispatched operation rejected its arguments.
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& message, std::string subexpression);
  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

/// One rewrite. `before`/`after` render the whole term; `redex` is the
/// rewritten subterm and `contractum` its replacement. Annotation steps
/// (R-KONIG, R-CANTOR) record a derived fact and leave the term unchanged.
struct TraceStep {
  std::string rule_id;
  std::string statement;
  std::string before;
  std::string after;
  std::string redex;
  std::string contractum;
  std::string note;
};

struct DerivationTrace {
  std::string input;
  Mode mode = Mode::ZFC;
  std::string result;
  std::vector<TraceStep> steps;
  std::optional<Bounds> bounds;      // for unresolved Exp/Between results
  std::vector<Cardinal> candidates;  // for unresolved Max results
};

struct Evaluation {
  Cardinal value;
  DerivationTrace trace;
};

/// Rewrites leftmost-innermost to normal form. Deterministic: the same input
/// and mode give a byte-identical trace. Throws EvalError.
Evaluation evaluate(const Expr& expr, Mode mode);
Evaluation evaluate(std::string_view text, Mode mode);

/// Rewrites a single redex (a node whose children are all values in `mode`).
/// Returns the steps taken: optional annotations, then the main rewrite
/// (whose contractum is the new subterm), then annotations on the result.
struct Rewrite {
  std::string rule_id;
  Expr result;
  std::string note;
  bool annotation = false;
};
std::vector<Rewrite> rewrite_redex(const Expr& redex, Mode mode);

/// Replays a trace from its input: each step must match the rule, redex and
/// contractum the engine derives, steps must chain, and the last term must
/// be the recorded result. On failure sets *why.
bool replay(const DerivationTrace& trace, std::string* why = nullptr);

nlohmann::json to_json(const DerivationTrace& trace);
std::string to_text(const DerivationTrace& trace);
/// `exp(aleph(w), aleph(0)) in (aleph(w), 2^aleph(w)]` style summary.
std::string describe_result(const DerivationTrace& trace);

}  // namespace cardalg
