#include "cardalg/algebra_card.hpp"
#include "cardalg/cardinal_ops.hpp"

namespace cardalg {

namespace {

Cardinal run(const Expr& e, Mode mode, DerivationTrace* trace) {
  Evaluation ev = evaluate(e, mode);
  if (trace) *trace = std::move(ev.trace);
  return std::move(ev.value);
}

Cardinal call(const char* name, std::initializer_list<Cardinal> args, Mode mode,
              DerivationTrace* trace) {
  std::vector<Expr> xs;
  for (const Cardinal& a : args) xs.push_back(to_expr(a));
  return run(Expr::make_call(name, std::move(xs)), mode, trace);
}

}  // namespace

Cardinal normalize(const Cardinal& c, Mode mode, DerivationTrace* trace) {
  return run(to_expr(c), mode, trace);
}

Cardinal card_add(const Cardinal& a, const Cardinal& b, Mode mode, DerivationTrace* trace) {
  return run(Expr::make_add(to_expr(a), to_expr(b)), mode, trace);
}

Cardinal card_mul(const Cardinal& a, const Cardinal& b, Mode mode, DerivationTrace* trace) {
  return run(Expr::make_mul(to_expr(a), to_expr(b)), mode, trace);
}

Cardinal card_pow(const Cardinal& base, const Cardinal& exponent, Mode mode, DerivationTrace* trace) {
  return run(Expr::make_pow(to_expr(base), to_expr(exponent)), mode, trace);
}

CompareResult card_compare(const Cardinal& a, const Cardinal& b, Mode mode) {
  return compare_normal(normalize(a, mode), normalize(b, mode));
}

Cardinal card_sum_family(const Cardinal& index, const Cardinal& lo, const Cardinal& hi, Mode mode,
                         DerivationTrace* trace) {
  return call("card_sum", {index, lo, hi}, mode, trace);
}

Cardinal card_prod_family(const Cardinal& index, const Cardinal& lo, const Cardinal& hi, Mode mode,
                          DerivationTrace* trace) {
  return call("card_prod", {index, lo, hi}, mode, trace);
}

Cardinal card_finsets(const Cardinal& s, Mode mode, DerivationTrace* trace) {
  return call("card_finsets", {s}, mode, trace);
}

Cardinal card_directsum(const Cardinal& m, const Cardinal& s, Mode mode, DerivationTrace* trace) {
  return call("card_dsum", {m, s}, mode, trace);
}

Cardinal card_monoid_ring(const Cardinal& r, const Cardinal& m, Mode mode, DerivationTrace* trace) {
  return call("card_monoid_ring", {r, m}, mode, trace);
}

Cardinal card_poly_ring(const Cardinal& r, const Cardinal& s, Mode mode, DerivationTrace* trace) {
  return call("card_poly", {r, s}, mode, trace);
}

Cardinal card_power_series(const Cardinal& r, Mode mode, DerivationTrace* trace) {
  return call("card_powser", {r}, mode, trace);
}

Cardinal card_fraction_ring(const Cardinal& r, Mode mode, DerivationTrace* trace) {
  return call("card_tfr", {r}, mode, trace);
}

}  // namespace cardalg
