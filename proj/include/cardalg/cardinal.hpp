#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cardalg/natural.hpp"
#include "cardalg/ordinal.hpp"

namespace cardalg {

/// Axiom mode governing an evaluation. ZFC applies only rules provable from
/// the idempotency of infinite cardinals plus Cantor, König and monotonicity;
/// GCH additionally fixes 2^aleph(a) = aleph(a+1).
enum class Mode { ZFC, GCH };

enum class CompareResult { Less, Equal, Greater, Unknown };

std::string to_string(Mode mode);
std::string to_string(CompareResult r);

/// Symbolic cardinal term.
///
///   Finite(n)       exact natural
///   Aleph(a)        aleph indexed by an ordinal below epsilon_0
///   PowSet(k)       2^k
///   Exp(b, e)       b^e left unreduced (no rule decides it)
///   Max(k1, ...)    maximum of terms whose order is undecided
///   Between(l, h)   some cardinal in [l, h] (bounds from monotonicity)
///
/// The last two only arise where the engine cannot decide a comparison; they
/// keep undecided results exact instead of guessing.
class Cardinal {
 public:
  enum class Kind { Finite, Aleph, PowSet, Exp, Max, Between };

  Cardinal() = default;  // Finite(0)

  static Cardinal finite(Natural n);
  static Cardinal aleph(Ordinal index);
  static Cardinal aleph(unsigned long index) { return aleph(Ordinal::finite(index)); }
  static Cardinal powset(Cardinal base);
  static Cardinal exp(Cardinal base, Cardinal exponent);
  /// Raw constructor; see `make_max` for the normalizing one.
  static Cardinal max_of(std::vector<Cardinal> options);
  static Cardinal between(Cardinal lo, Cardinal hi);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ != Kind::Finite; }

  const Natural& value() const;       // Finite
  const Ordinal& index() const;       // Aleph
  const Cardinal& base() const;       // PowSet, Exp
  const Cardinal& exponent() const;   // Exp
  std::span<const Cardinal> options() const;  // Max
  const Cardinal& lo() const;         // Between
  const Cardinal& hi() const;         // Between

  /// Canonical rendering, e.g. `5`, `aleph(w+1)`, `2^aleph(0)`,
  /// `exp(aleph(w), aleph(0))`. Parses back to the same term.
  std::string to_string() const;

  friend bool operator==(const Cardinal& a, const Cardinal& b);

 private:
  Kind kind_ = Kind::Finite;
  Natural value_;
  Ordinal index_;
  std::vector<Cardinal> children_;
};

inline Cardinal aleph0() { return Cardinal::aleph(0ul); }

/// True when a <= b follows from the rule set (sound, not complete).
bool provably_le(const Cardinal& a, const Cardinal& b);
/// True when a < b follows from the rule set (sound, not complete).
bool provably_lt(const Cardinal& a, const Cardinal& b);

/// Three-way comparison of terms in normal form. Unknown only when neither
/// order is derivable.
CompareResult compare_normal(const Cardinal& a, const Cardinal& b);

/// aleph(a) with a zero or successor.
bool is_regular_aleph(const Cardinal& c);
/// aleph(a) with a a limit ordinal; below epsilon_0 these have cofinality aleph(0).
bool has_countable_cofinality(const Cardinal& c);
/// b^e > b by König: b has countable cofinality and e is infinite.
bool konig_applies(const Cardinal& base, const Cardinal& exponent);

/// Normal form test for the given mode.
bool is_normal(const Cardinal& c, Mode mode);

/// Normalizing maximum: flattens nested maxima, drops provably dominated
/// options, sorts the rest by rendering. Returns the single survivor if only
/// one remains.
Cardinal make_max(std::vector<Cardinal> options);

/// Bounds known for an unresolved term.
struct Bounds {
  Cardinal lower;
  bool lower_strict = false;
  Cardinal upper;
  bool upper_strict = false;
};

/// Bounds of an Exp or Between term; nullopt for other kinds.
std::optional<Bounds> bounds_of(const Cardinal& c);

}  // namespace cardalg
