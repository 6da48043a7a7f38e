#include <sstream>

#include "cardalg/trace.hpp"

namespace cardalg {

namespace {

constexpr std::size_t kMaxSteps = 10000;

// Path (child indices) to the leftmost-innermost redex, or nullopt when the
// term is already a value.
std::optional<std::vector<std::size_t>> find_redex(const Expr& e, Mode mode) {
  if (value_of(e, mode)) return std::nullopt;
  std::vector<std::size_t> path;
  const Expr* node = &e;
  for (;;) {
    bool descended = false;
    for (std::size_t i = 0; i < node->args.size(); ++i) {
      if (!value_of(node->args[i], mode)) {
        path.push_back(i);
        node = &node->args[i];
        descended = true;
        break;
      }
    }
    if (!descended) return path;
  }
}

Expr& at(Expr& root, const std::vector<std::size_t>& path) {
  Expr* node = &root;
  for (std::size_t i : path) node = &node->args[i];
  return *node;
}

TraceStep apply(Expr& term, const std::vector<std::size_t>& path, const Rewrite& rw) {
  TraceStep s;
  s.rule_id = rw.rule_id;
  if (const RuleInfo* info = find_rule(rw.rule_id)) s.statement = std::string(info->statement);
  s.before = render(term);
  Expr& node = at(term, path);
  s.redex = render(node);
  if (!rw.annotation) node = rw.result;
  s.contractum = render(rw.annotation ? node : rw.result);
  s.after = render(term);
  s.note = rw.note;
  return s;
}

std::string bracketed(const Bounds& b) {
  return std::string(b.lower_strict ? "(" : "[") + b.lower.to_string() + ", " +
         b.upper.to_string() + (b.upper_strict ? ")" : "]");
}

}  // namespace

Evaluation evaluate(const Expr& expr, Mode mode) {
  DerivationTrace trace;
  trace.input = render(expr);
  trace.mode = mode;
  Expr term = expr;
  while (auto path = find_redex(term, mode)) {
    if (trace.steps.size() >= kMaxSteps) throw EvalError("rewrite step limit exceeded", render(term));
    for (const Rewrite& rw : rewrite_redex(at(term, *path), mode))
      trace.steps.push_back(apply(term, *path, rw));
  }
  Cardinal value = *value_of(term, mode);
  trace.result = value.to_string();
  trace.bounds = bounds_of(value);
  if (value.kind() == Cardinal::Kind::Max)
    trace.candidates.assign(value.options().begin(), value.options().end());
  return Evaluation{std::move(value), std::move(trace)};
}

Evaluation evaluate(std::string_view text, Mode mode) { return evaluate(parse_expr(text), mode); }

bool replay(const DerivationTrace& trace, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  Expr term;
  try {
    term = parse_expr(trace.input);
  } catch (const ParseError& e) {
    return fail(std::string("input does not parse: ") + e.what());
  }
  std::size_t i = 0;
  try {
    while (auto path = find_redex(term, trace.mode)) {
      for (const Rewrite& rw : rewrite_redex(at(term, *path), trace.mode)) {
        if (i >= trace.steps.size()) return fail("trace ends before a normal form is reached");
        const TraceStep& rec = trace.steps[i];
        if (!find_rule(rec.rule_id)) return fail("step " + std::to_string(i + 1) + ": unknown rule " + rec.rule_id);
        const TraceStep got = apply(term, *path, rw);
        const std::string where = "step " + std::to_string(i + 1) + ": ";
        if (rec.rule_id != got.rule_id) return fail(where + "rule " + rec.rule_id + " does not apply, expected " + got.rule_id);
        if (rec.before != got.before) return fail(where + "does not continue from the previous term");
        if (rec.redex != got.redex) return fail(where + "redex mismatch");
        if (rec.contractum != got.contractum) return fail(where + "contractum mismatch");
        if (rec.after != got.after) return fail(where + "resulting term mismatch");
        ++i;
      }
    }
  } catch (const EvalError& e) {
    return fail(std::string("evaluation rejected: ") + e.what());
  }
  if (i != trace.steps.size()) return fail("trace has steps after the normal form");
  if (render(term) != trace.result) return fail("final term differs from the recorded result");
  return true;
}

nlohmann::json to_json(const DerivationTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back({{"rule_id", s.rule_id},
                     {"statement", s.statement},
                     {"before", s.before},
                     {"after", s.after},
                     {"redex", s.redex},
                     {"contractum", s.contractum},
                     {"note", s.note}});
  }
  nlohmann::json out = {{"schema_version", 1},
                        {"input", trace.input},
                        {"mode", to_string(trace.mode)},
                        {"result", trace.result},
                        {"steps", std::move(steps)}};
  if (trace.bounds) {
    out["bounds"] = {{"lower", trace.bounds->lower.to_string()},
                     {"lower_strict", trace.bounds->lower_strict},
                     {"upper", trace.bounds->upper.to_string()},
                     {"upper_strict", trace.bounds->upper_strict}};
  } else {
    out["bounds"] = nullptr;
  }
  nlohmann::json cands = nlohmann::json::array();
  for (const Cardinal& c : trace.candidates) cands.push_back(c.to_string());
  out["candidates"] = std::move(cands);
  return out;
}

std::string describe_result(const DerivationTrace& trace) {
  if (trace.bounds) return trace.result + " in " + bracketed(*trace.bounds);
  if (!trace.candidates.empty()) {
    std::string s = trace.result + " (unknown order:";
    for (std::size_t i = 0; i < trace.candidates.size(); ++i)
      s += (i ? " ? " : " ") + trace.candidates[i].to_string();
    return s + ")";
  }
  return trace.result;
}

std::string to_text(const DerivationTrace& trace) {
  std::ostringstream os;
  os << "input:  " << trace.input << "\n";
  os << "mode:   " << to_string(trace.mode) << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    os << "  " << (i + 1) << ". [" << s.rule_id << "] ";
    if (s.before == s.after)
      os << s.redex;
    else
      os << s.redex << "  =>  " << s.contractum;
    os << "\n       " << s.statement << "\n";
    if (!s.note.empty()) os << "       note: " << s.note << "\n";
    if (s.before != s.after) os << "       term: " << s.after << "\n";
  }
  os << "result: " << describe_result(trace) << "\n";
  return os.str();
}

}  // namespace cardalg
