#include "cardalg/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace cardalg {

namespace {

const std::vector<std::string> kAtomStart = {"number", "'aleph'", "function name", "'('"};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : cur_(text) {}

  Expr parse_all() {
    Expr e = sum();
    if (!cur_.at_end()) cur_.fail({"'+'", "'*'", "'^'", "end of input"}, "unexpected input");
    return e;
  }

  Ordinal ordinal_all() {
    Ordinal o = ordinal();
    cur_.expect_end();
    return o;
  }

 private:
  Expr sum() {
    Expr e = product();
    while (true) {
      cur_.skip_space();
      const std::size_t at = cur_.offset();
      if (!cur_.accept("+")) return e;
      Expr rhs = product();
      e = Expr::make_add(std::move(e), std::move(rhs));
      e.offset = at;
    }
  }

  Expr product() {
    Expr e = power();
    while (true) {
      cur_.skip_space();
      const std::size_t at = cur_.offset();
      if (!cur_.accept("*")) return e;
      Expr rhs = power();
      e = Expr::make_mul(std::move(e), std::move(rhs));
      e.offset = at;
    }
  }

  Expr power() {
    Expr base = atom();
    cur_.skip_space();
    const std::size_t at = cur_.offset();
    if (!cur_.accept("^")) return base;
    Expr e = Expr::make_pow(std::move(base), power());
    e.offset = at;
    return e;
  }

  Expr atom() {
    cur_.skip_space();
    const std::size_t at = cur_.offset();
    if (cur_.peek_digit()) {
      Expr e = Expr::make_number(cur_.natural());
      e.offset = at;
      return e;
    }
    if (cur_.accept("(")) {
      Expr e = sum();
      cur_.expect(")");
      return e;
    }
    std::string name;
    if (!cur_.identifier(name)) cur_.fail(kAtomStart, "unexpected input");
    if (name == "aleph") {
      cur_.expect("(");
      Expr e = Expr::make_aleph(ordinal());
      cur_.expect(")");
      e.offset = at;
      return e;
    }
    const auto& fns = expression_functions();
    auto it = std::find_if(fns.begin(), fns.end(),
                           [&](const FunctionInfo& f) { return f.name == name; });
    if (it == fns.end()) {
      std::vector<std::string> names = {"'aleph'"};
      for (const auto& f : fns) names.push_back("'" + std::string(f.name) + "'");
      cur_.fail_at(at, names, "unknown function '" + name + "'");
    }
    cur_.expect("(");
    std::vector<Expr> args;
    args.push_back(sum());
    while (cur_.accept(",")) args.push_back(sum());
    cur_.skip_space();
    if (args.size() < it->min_args || args.size() > it->max_args)
      cur_.fail_at(at, {}, name + " expects " + std::to_string(it->min_args) +
                               (it->max_args > it->min_args ? " or more" : "") +
                               " argument(s), got " + std::to_string(args.size()));
    cur_.expect(")");
    Expr e = Expr::make_call(std::move(name), std::move(args));
    e.offset = at;
    return e;
  }

  // ordinal := oterm ('+' oterm)*
  Ordinal ordinal() {
    cur_.skip_space();
    const std::size_t at = cur_.offset();
    std::vector<Ordinal::Term> terms;
    do {
      Ordinal::Term t = ordinal_term();
      if (t.coefficient == 0) {
        if (!terms.empty() || cur_.peek() == '+')
          cur_.fail_at(at, {}, "zero term inside an ordinal sum");
        continue;
      }
      terms.push_back(std::move(t));
    } while (cur_.accept("+"));
    try {
      return Ordinal::from_terms(std::move(terms));
    } catch (const std::invalid_argument& e) {
      cur_.fail_at(at, {}, e.what());
    }
  }

  // oterm := NAT | 'w' ['^' oatom] ['*' NAT]
  Ordinal::Term ordinal_term() {
    if (cur_.peek_digit()) return {Ordinal{}, cur_.natural()};
    if (!cur_.accept("w")) cur_.fail({"number", "'w'"}, "unexpected input in ordinal");
    Ordinal exponent = Ordinal::finite(1);
    if (cur_.accept("^")) {
      if (cur_.peek_digit())
        exponent = Ordinal::finite(cur_.natural());
      else if (cur_.accept("w"))
        exponent = Ordinal::omega();
      else if (cur_.accept("(")) {
        exponent = ordinal();
        cur_.expect(")");
      } else {
        cur_.fail({"number", "'w'", "'('"}, "unexpected input in ordinal exponent");
      }
    }
    Natural coefficient = 1;
    if (cur_.accept("*")) {
      const std::size_t at = (cur_.skip_space(), cur_.offset());
      coefficient = cur_.natural();
      if (coefficient == 0) cur_.fail_at(at, {}, "ordinal coefficient must be positive");
    }
    return {std::move(exponent), std::move(coefficient)};
  }

  Cursor cur_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
  }
}

std::string render_at(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Number: s = e.number.str(); break;
    case Expr::Kind::Aleph: s = "aleph(" + e.index.to_string() + ")"; break;
    case Expr::Kind::Add: s = render_at(e.args[0], 1) + " + " + render_at(e.args[1], 2); break;
    case Expr::Kind::Mul: s = render_at(e.args[0], 2) + " * " + render_at(e.args[1], 3); break;
    case Expr::Kind::Pow: s = render_at(e.args[0], 4) + "^" + render_at(e.args[1], 3); break;
    case Expr::Kind::Call:
      s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i)
        s += (i ? ", " : "") + render_at(e.args[i], 0);
      s += ")";
      break;
  }
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expr Expr::make_number(Natural n) {
  Expr e;
  e.kind = Kind::Number;
  e.number = std::move(n);
  return e;
}

Expr Expr::make_aleph(Ordinal index) {
  Expr e;
  e.kind = Kind::Aleph;
  e.index = std::move(index);
  return e;
}

Expr Expr::make_add(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::Add;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::make_mul(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::Mul;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::make_pow(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::Pow;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::make_call(std::string name, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Call;
  e.name = std::move(name);
  e.args = std::move(args);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Aleph: return a.index == b.index;
    case Expr::Kind::Call: return a.name == b.name && a.args == b.args;
    default: return a.args == b.args;
  }
}

const std::vector<FunctionInfo>& expression_functions() {
  static const std::vector<FunctionInfo> fns = {
      {"card_monoid_ring", 2, 2}, {"card_poly", 2, 2},    {"card_powser", 1, 1},
      {"card_tfr", 1, 1},         {"card_finsets", 1, 1}, {"card_dsum", 2, 2},
      {"card_sum", 3, 3},         {"card_prod", 3, 3},    {"exp", 2, 2},
      {"max", 2, 64},             {"between", 2, 2},
  };
  return fns;
}

Expr parse_expr(std::string_view text) { return ExprParser(text).parse_all(); }

Ordinal parse_ordinal(std::string_view text) { return ExprParser(text).ordinal_all(); }

std::string render(const Expr& e) { return render_at(e, 0); }

Expr to_expr(const Cardinal& c) {
  switch (c.kind()) {
    case Cardinal::Kind::Finite: return Expr::make_number(c.value());
    case Cardinal::Kind::Aleph: return Expr::make_aleph(c.index());
    case Cardinal::Kind::PowSet: return Expr::make_pow(Expr::make_number(2), to_expr(c.base()));
    case Cardinal::Kind::Exp:
      return Expr::make_call("exp", {to_expr(c.base()), to_expr(c.exponent())});
    case Cardinal::Kind::Between:
      return Expr::make_call("between", {to_expr(c.lo()), to_expr(c.hi())});
    case Cardinal::Kind::Max: {
      std::vector<Expr> args;
      for (const Cardinal& o : c.options()) args.push_back(to_expr(o));
      return Expr::make_call("max", std::move(args));
    }
  }
  throw std::logic_error("unreachable cardinal kind");
}

std::optional<Cardinal> as_literal(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return Cardinal::finite(e.number);
    case Expr::Kind::Aleph: return Cardinal::aleph(e.index);
    case Expr::Kind::Pow: {
      if (e.args[0].kind != Expr::Kind::Number || e.args[0].number != 2) return std::nullopt;
      auto exponent = as_literal(e.args[1]);
      if (!exponent || exponent->is_finite()) return std::nullopt;
      return Cardinal::powset(std::move(*exponent));
    }
    case Expr::Kind::Call: {
      std::vector<Cardinal> xs;
      if (e.name != "exp" && e.name != "max" && e.name != "between") return std::nullopt;
      for (const Expr& a : e.args) {
        auto x = as_literal(a);
        if (!x) return std::nullopt;
        xs.push_back(std::move(*x));
      }
      if (e.name == "exp") return Cardinal::exp(xs[0], xs[1]);
      if (e.name == "between") return Cardinal::between(xs[0], xs[1]);
      return Cardinal::max_of(std::move(xs));
    }
    default:
      return std::nullopt;
  }
}

std::optional<Cardinal> value_of(const Expr& e, Mode mode) {
  auto c = as_literal(e);
  if (c && is_normal(*c, mode)) return c;
  return std::nullopt;
}

}  // namespace cardalg
