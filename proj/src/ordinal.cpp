#include "cardalg/ordinal.hpp"

#include <stdexcept>

#include "cardalg/expr.hpp"

namespace cardalg {

namespace {

std::strong_ordering compare_naturals(const Natural& a, const Natural& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_simple_exponent(const Ordinal& e) {
  // Renders without parentheses after '^': a natural, or plain w.
  if (e.is_finite()) return true;
  return e.terms().size() == 1 && e.terms()[0].coefficient == 1 &&
         e.terms()[0].exponent == Ordinal::finite(1);
}

}  // namespace

Ordinal Ordinal::finite(const Natural& n) {
  Ordinal o;
  if (n != 0) o.terms_.push_back(Term{Ordinal{}, n});
  return o;
}

Ordinal Ordinal::omega() {
  Ordinal o;
  o.terms_.push_back(Term{finite(1), 1});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw std::invalid_argument("ordinal coefficients must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must strictly decrease");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

Ordinal Ordinal::parse(std::string_view text) { return parse_ordinal(text); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Natural Ordinal::finite_value() const {
  if (!is_finite()) throw std::logic_error("ordinal is not finite");
  return terms_.empty() ? Natural(0) : terms_[0].coefficient;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i) out += "+";
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += "w";
    if (t.exponent != finite(1)) {
      const std::string e = t.exponent.to_string();
      out += is_simple_exponent(t.exponent) ? "^" + e : "^(" + e + ")";
    }
    if (t.coefficient != 1) out += "*" + t.coefficient.str();
  }
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coefficient != b.terms_[i].coefficient ||
        !(a.terms_[i].exponent == b.terms_[i].exponent))
      return false;
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = compare_naturals(a.terms_[i].coefficient, b.terms_[i].coefficient); c != 0)
      return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal successor(const Ordinal& a) {
  std::vector<Ordinal::Term> terms = a.terms();
  if (!terms.empty() && terms.back().exponent.is_zero())
    terms.back().coefficient += 1;
  else
    terms.push_back(Ordinal::Term{Ordinal{}, 1});
  return Ordinal::from_terms(std::move(terms));
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::Zero;
  return a.terms().back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

}  // namespace cardalg
