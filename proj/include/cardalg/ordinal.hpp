#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cardalg/natural.hpp"

namespace cardalg {

enum class OrdinalKind { Zero, Successor, Limit };

/// Ordinal below epsilon_0 in Cantor normal form
///
///   w^e1*c1 + w^e2*c2 + ... + w^ek*ck,   e1 > e2 > ... > ek,  ci >= 1.
///
/// The empty term list is 0. Because the form is unique, structural equality
/// is ordinal equality. Used as the index of alephs.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  static Ordinal finite(const Natural& n);
  static Ordinal omega();
  /// Throws std::invalid_argument unless exponents strictly decrease and all
  /// coefficients are positive.
  static Ordinal from_terms(std::vector<Term> terms);
  /// Text syntax: `0`, `7`, `w`, `w^2*3+w+4`, `w^(w+1)`.
  static Ordinal parse(std::string_view text);

  const std::vector<Term>& terms() const;
  bool is_zero() const;
  bool is_finite() const;
  /// Precondition: is_finite().
  Natural finite_value() const;

  std::string to_string() const;

  friend bool operator==(const Ordinal&, const Ordinal&);
  friend std::strong_ordering operator<=>(const Ordinal&, const Ordinal&);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Natural coefficient;
};

inline const std::vector<Ordinal::Term>& Ordinal::terms() const { return terms_; }
inline bool Ordinal::is_zero() const { return terms_.empty(); }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
Ordinal successor(const Ordinal& a);
OrdinalKind classify(const Ordinal& a);

}  // namespace cardalg
