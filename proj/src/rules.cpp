#include <algorithm>
#include <stdexcept>

#include "cardalg/trace.hpp"

namespace cardalg {

namespace {

using K = Cardinal::Kind;

[[noreturn]] void reject(const Expr& redex, const std::string& message) {
  const std::string sub = render(redex);
  throw EvalError(message + " in '" + sub + "'", sub);
}

Rewrite make(std::string id, Expr result, std::string note = {}) {
  return Rewrite{std::move(id), std::move(result), std::move(note), false};
}

Rewrite annotate(std::string id, Expr term, std::string note) {
  return Rewrite{std::move(id), std::move(term), std::move(note), true};
}

Expr lit(const Cardinal& c) { return to_expr(c); }

bool is_zero(const Cardinal& c) { return c.is_finite() && c.value() == 0; }
bool at_most_one(const Cardinal& c) { return c.is_finite() && c.value() <= 1; }

std::optional<Rewrite> distribute(const Expr& redex, const std::vector<Cardinal>& xs) {
  const bool is_max = redex.kind == Expr::Kind::Call && redex.name == "max";
  const bool is_between = redex.kind == Expr::Kind::Call && redex.name == "between";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Cardinal& x = xs[i];
    if (x.kind() == K::Between) {
      if (is_between) {
        Expr e = redex;
        e.args[i] = lit(i == 0 ? x.lo() : x.hi());
        return make("R-DIST", std::move(e), "nested interval bound replaced by its outer end");
      }
      Expr lo = redex, hi = redex;
      lo.args[i] = lit(x.lo());
      hi.args[i] = lit(x.hi());
      return make("R-DIST", Expr::make_call("between", {std::move(lo), std::move(hi)}),
                  "monotone operation applied to both interval bounds");
    }
    if (x.kind() == K::Max && !is_max && !is_between) {
      std::vector<Expr> alts;
      for (const Cardinal& o : x.options()) {
        Expr e = redex;
        e.args[i] = lit(o);
        alts.push_back(std::move(e));
      }
      return make("R-DIST", Expr::make_call("max", std::move(alts)),
                  "monotone operation distributed over an undecided maximum");
    }
  }
  return std::nullopt;
}

std::vector<Rewrite> cantor_note(const Expr& redex, const Cardinal& a, const Cardinal& b) {
  for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
    if (y->kind() == K::PowSet && x->is_infinite() && provably_le(*x, y->base()))
      return {annotate("R-CANTOR", redex,
                       x->to_string() + " < " + y->to_string() + " since " + x->to_string() +
                           " <= " + y->base().to_string())};
  }
  return {};
}

std::vector<Rewrite> add_rules(const Expr& redex, const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return {make("R-FIN", lit(Cardinal::finite(a.value() + b.value())))};
  if (a == b) return {make("R-ADD", lit(a), "k + k = k")};
  std::vector<Rewrite> out = cantor_note(redex, a, b);
  if (provably_le(a, b))
    out.push_back(make("R-ADD", lit(b)));
  else if (provably_le(b, a))
    out.push_back(make("R-ADD", lit(a)));
  else
    out.push_back(make("R-ADD", lit(make_max({a, b})),
                       "order of " + a.to_string() + " and " + b.to_string() +
                           " is undecided; the sum is their maximum"));
  return out;
}

std::vector<Rewrite> mul_rules(const Expr& redex, const Cardinal& a, const Cardinal& b) {
  if (is_zero(a) || is_zero(b)) return {make("R-FIN", lit(Cardinal::finite(0)), "zero factor")};
  if (a.is_finite() && b.is_finite()) return {make("R-FIN", lit(Cardinal::finite(a.value() * b.value())))};
  if (a == b) return {make("R-IDEM", lit(a), "k * k = k")};
  std::vector<Rewrite> out = cantor_note(redex, a, b);
  if (provably_le(a, b))
    out.push_back(make("R-MUL", lit(b)));
  else if (provably_le(b, a))
    out.push_back(make("R-MUL", lit(a)));
  else
    out.push_back(make("R-MUL", lit(make_max({a, b})),
                       "order of " + a.to_string() + " and " + b.to_string() +
                           " is undecided; the product is their maximum"));
  return out;
}

Cardinal gch_power(const Cardinal& b, const Cardinal& e) {
  // e < b, both alephs
  if (provably_lt(e, b) && is_regular_aleph(b)) return b;
  return Cardinal::aleph(successor(b.index()));
}

std::vector<Rewrite> pow_rules(const Expr& redex, const Cardinal& b, const Cardinal& e, Mode mode) {
  if (b.is_finite() && e.is_finite()) {
    try {
      return {make("R-FIN", lit(Cardinal::finite(checked_pow(b.value(), e.value()))))};
    } catch (const std::length_error& err) {
      reject(redex, err.what());
    }
  }
  if (is_zero(e)) return {make("R-FIN", lit(Cardinal::finite(1)), "k^0 = 1")};
  if (is_zero(b)) return {make("R-FIN", lit(Cardinal::finite(0)), "0^k = 0 for k >= 1")};
  if (b.is_finite() && b.value() == 1) return {make("R-FIN", lit(b), "1^k = 1")};
  if (e.is_finite()) return {make("R-IDEM", lit(b), "k^n = k for infinite k and finite n >= 1")};

  const Expr two = Expr::make_number(2);
  if (b.kind() == K::PowSet)
    return {make("R-EXP-NEST", Expr::make_pow(two, Expr::make_mul(lit(b.base()), lit(e))))};
  if (b.kind() == K::Exp)
    return {make("R-EXP-NEST",
                 Expr::make_pow(lit(b.base()), Expr::make_mul(lit(b.exponent()), lit(e))))};

  if (b.is_finite()) {
    if (b.value() == 2 && mode == Mode::GCH) {
      if (e.kind() != K::Aleph) reject(redex, "GCH exponent is not an aleph");
      return {make("R-GCH-EXP", lit(Cardinal::aleph(successor(e.index()))), "2^aleph(a) = aleph(a+1)")};
    }
    return {make("R-EXP-SQUEEZE", Expr::make_pow(two, lit(e)),
                 "2 <= " + b.to_string() + " <= " + e.to_string())};
  }

  std::vector<Rewrite> out;
  if (provably_le(b, Cardinal::powset(e))) {
    out.push_back(make("R-EXP-SQUEEZE", Expr::make_pow(two, lit(e)),
                       "2 <= " + b.to_string() + " <= 2^" + e.to_string()));
    return out;
  }
  if (provably_lt(e, b)) {
    if (mode == Mode::GCH) {
      const Cardinal r = gch_power(b, e);
      out.push_back(make("R-GCH-EXP", lit(r),
                         is_regular_aleph(b) ? "cf(" + b.to_string() + ") > " + e.to_string()
                                             : "cf(" + b.to_string() + ") = aleph(0) <= " +
                                                   e.to_string() + ", so the power is the successor"));
      return out;
    }
    out.push_back(make("R-EXP-SMALL", lit(Cardinal::exp(b, e)),
                       "candidates {" + b.to_string() + ", " + Cardinal::powset(b).to_string() + "}"));
  } else {
    if (mode == Mode::GCH) reject(redex, "comparison undecided under GCH");
    out.push_back(make("R-EXP-OPEN", lit(Cardinal::exp(b, e)),
                       "order of " + e.to_string() + " and " + b.to_string() + " is undecided"));
  }
  if (konig_applies(b, e)) {
    const Cardinal term = Cardinal::exp(b, e);
    const auto bounds = bounds_of(term);
    out.push_back(annotate("R-KONIG", lit(term),
                           "cf(" + b.to_string() + ") = aleph(0) <= " + e.to_string() + ", so " +
                               b.to_string() + " < " + term.to_string() + " <= " +
                               bounds->upper.to_string() +
                               "; equality with the upper bound is not derivable here"));
  }
  return out;
}

std::vector<Rewrite> call_rules(const Expr& redex, const std::vector<Cardinal>& xs, Mode mode) {
  const std::string& f = redex.name;
  auto mul = [](const Cardinal& a, const Cardinal& b) { return Expr::make_mul(lit(a), lit(b)); };
  auto pow = [](const Cardinal& a, const Cardinal& b) { return Expr::make_pow(lit(a), lit(b)); };

  if (f == "exp") return pow_rules(redex, xs[0], xs[1], mode);

  if (f == "max") return {make("R-MAX", lit(make_max(xs)))};

  if (f == "between") {
    if (provably_lt(xs[1], xs[0])) reject(redex, "lower bound exceeds upper bound");
    if (provably_le(xs[1], xs[0])) return {make("R1-MONO", lit(xs[0]), "bounds coincide")};
    throw std::logic_error("no rule applies to " + render(redex));
  }

  if (f == "card_finsets") {
    const Cardinal& s = xs[0];
    if (s.is_finite()) return {make("L4-FIN", pow(Cardinal::finite(2), s), "finite S: Fin(S) is the power set")};
    return {make("L4-FIN", lit(s))};
  }

  if (f == "card_dsum") {
    const Cardinal& m = xs[0];
    const Cardinal& s = xs[1];
    if (s.is_finite() || at_most_one(m)) return {make("L3-DSUM", pow(m, s))};
    return {make("L3-DSUM", mul(m, s))};
  }

  if (f == "card_sum") {
    const Cardinal &index = xs[0], &lo = xs[1], &hi = xs[2];
    if (index.is_finite()) reject(redex, "card_sum: the index set must be infinite");
    if (is_zero(lo)) reject(redex, "card_sum: summands must be nonempty (lo >= 1)");
    if (provably_lt(hi, lo)) reject(redex, "card_sum: lo exceeds hi");
    if (lo == hi) return {make("L1-SUM", mul(lo, index), "constant family")};
    if (provably_le(hi, index)) return {make("L2-SUM-BOUND", lit(index))};
    return {make("R1-MONO", Expr::make_call("between", {mul(lo, index), mul(hi, index)}),
                 "family only known to lie between lo and hi")};
  }

  if (f == "card_prod") {
    const Cardinal &index = xs[0], &lo = xs[1], &hi = xs[2];
    if (index.is_finite()) reject(redex, "card_prod: the index set must be infinite");
    if (provably_lt(hi, lo)) reject(redex, "card_prod: lo exceeds hi");
    if (lo == hi) return {make("L1-PROD", pow(lo, index), "constant family")};
    if (at_most_one(lo)) reject(redex, "card_prod: factors need at least two elements (lo >= 2)");
    if (provably_le(hi, index)) return {make("L-PROD-BOUND", pow(Cardinal::finite(2), index))};
    return {make("R1-MONO", Expr::make_call("between", {pow(lo, index), pow(hi, index)}),
                 "family only known to lie between lo and hi")};
  }

  if (f == "card_monoid_ring") {
    const Cardinal &r = xs[0], &m = xs[1];
    if (at_most_one(r)) reject(redex, "card_monoid_ring: the ring must be nonzero (|R| >= 2)");
    if (is_zero(m)) reject(redex, "card_monoid_ring: a monoid is nonempty");
    if (m.is_finite()) return {make("T1-MONOID", pow(r, m), "finite monoid")};
    return {make("T1-MONOID", mul(r, m), "infinite monoid")};
  }

  if (f == "card_poly") {
    const Cardinal &r = xs[0], &s = xs[1];
    if (at_most_one(r)) reject(redex, "card_poly: the ring must be nonzero (|R| >= 2)");
    if (is_zero(s)) reject(redex, "card_poly: at least one variable is required (|S| >= 1)");
    return {make("C-POLY", Expr::make_mul(Expr::make_aleph(Ordinal{}), mul(r, s)))};
  }

  if (f == "card_powser") {
    const Cardinal& r = xs[0];
    if (at_most_one(r)) reject(redex, "card_powser: the ring must be nonzero (|R| >= 2)");
    if (r.is_finite())
      return {make("R-PS", pow(Cardinal::finite(2), aleph0()), "finite nonzero ring")};
    return {make("R-PS", pow(r, aleph0()), "infinite ring")};
  }

  if (f == "card_tfr") {
    const Cardinal& r = xs[0];
    if (is_zero(r)) reject(redex, "card_tfr: a ring has at least one element");
    if (r.is_finite()) return {make("L6-ZERODIM", lit(r))};
    return {make("L5-FRAC", lit(r))};
  }

  throw std::logic_error("unknown function " + f);
}

}  // namespace

const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> rules = {
      {"R-FIN", "exact finite arithmetic; 0*k = 0, k^0 = 1, 0^k = 0 for k >= 1, 1^k = 1"},
      {"R-ADD", "a + b = max{a, b} when a or b is infinite"},
      {"R-MUL", "a * b = max{a, b} when one factor is infinite and neither is 0"},
      {"R-IDEM", "k * k = k, and k^n = k for finite n >= 1, when k is infinite"},
      {"R-EXP-SQUEEZE", "2 <= b <= 2^a with a infinite gives b^a = 2^a (in particular when b <= a)"},
      {"R-EXP-SMALL", "a < b with a infinite gives b^a in {b, 2^b}"},
      {"R-EXP-OPEN", "b^a stays unreduced when the order of a and b is undecided"},
      {"R-EXP-NEST", "(k^l)^m = k^(l*m)"},
      {"R-CANTOR", "k < 2^k"},
      {"R-KONIG", "cf(k) <= a with a infinite gives k < k^a, and k^a <= 2^k when a <= k"},
      {"R-GCH-EXP", "under GCH 2^aleph(a) = aleph(a+1); for a < b, b^a = b if cf(b) > a, else b+"},
      {"R-MAX", "a maximum drops provably dominated options"},
      {"R-DIST", "monotone operations distribute over maxima and interval bounds"},
      {"R1-MONO", "|A_k| <= |B_k| for all k gives sum A_k <= sum B_k and prod A_k <= prod B_k"},
      {"L1-SUM", "sum over k in S of |M| = |M| * |S|"},
      {"L1-PROD", "product over k in S of |M| = |M|^|S|"},
      {"L2-SUM-BOUND", "S infinite and 1 <= |A_k| <= |S| for all k gives sum A_k = |S|"},
      {"L-PROD-BOUND", "S infinite and 2 <= |A_k| <= |S| for all k gives prod A_k = 2^|S|"},
      {"L4-FIN", "|Fin(S)| = |S| for S infinite, 2^|S| for S finite"},
      {"L3-DSUM", "|direct sum over S of M| = |M|^|S| if S is finite or |M| <= 1, else |M| * |S|"},
      {"T1-MONOID", "|R[M]| = |R|^|M| for M finite and |R| * |M| for M infinite (R nonzero)"},
      {"C-POLY", "|R[x_k : k in S]| = aleph(0) * |R| * |S| (R nonzero, S nonempty)"},
      {"R-PS", "|R[[x]]| = 2^aleph(0) for R finite nonzero and |R|^aleph(0) for R infinite"},
      {"L5-FRAC", "|S^-1 R| = |R| for R infinite and S a set of non-zero-divisors"},
      {"L6-ZERODIM", "a finite ring is zero-dimensional, hence equal to its total ring of fractions"},
  };
  return rules;
}

const RuleInfo* find_rule(std::string_view id) {
  for (const RuleInfo& r : rule_table())
    if (r.id == id) return &r;
  return nullptr;
}

EvalError::EvalError(const std::string& message, std::string subexpression)
    : std::runtime_error(message), subexpression_(std::move(subexpression)) {}

std::vector<Rewrite> rewrite_redex(const Expr& redex, Mode mode) {
  std::vector<Cardinal> xs;
  for (const Expr& a : redex.args) {
    auto v = value_of(a, mode);
    if (!v) throw std::logic_error("rewrite_redex: argument not in normal form: " + render(a));
    xs.push_back(std::move(*v));
  }
  if (auto d = distribute(redex, xs)) return {std::move(*d)};
  switch (redex.kind) {
    case Expr::Kind::Add: return add_rules(redex, xs[0], xs[1]);
    case Expr::Kind::Mul: return mul_rules(redex, xs[0], xs[1]);
    case Expr::Kind::Pow: return pow_rules(redex, xs[0], xs[1], mode);
    case Expr::Kind::Call: return call_rules(redex, xs, mode);
    default: throw std::logic_error("literal is not a redex: " + render(redex));
  }
}

}  // namespace cardalg
