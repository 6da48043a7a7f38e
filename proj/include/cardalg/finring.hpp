#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cardalg/bitset.hpp"
#include "cardalg/cap.hpp"
#include "cardalg/natural.hpp"

namespace cardalg {

using Elem = std::uint32_t;

/// Finite monoid given by its operation table.
class MonoidTable {
 public:
  /// Validates the identity law and associativity exhaustively.
  MonoidTable(std::string name, std::size_t identity, std::vector<std::vector<std::size_t>> table);

  /// Cyclic group C_n.
  static MonoidTable cyclic(std::size_t n);
  /// {0, ..., n-1} under addition truncated at n-1.
  static MonoidTable truncated(std::size_t n);
  /// {e, a, b} with xy = x for x, y in {a, b}; associative, not commutative.
  static MonoidTable left_zero_two();
  /// `C3`, `N4`, `LZ2`.
  static MonoidTable parse(std::string_view text);

  const std::string& name() const { return name_; }
  std::size_t size() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
  bool is_commutative() const;

  friend bool operator==(const MonoidTable& a, const MonoidTable& b) {
    return a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::size_t identity_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Finite abelian group Z/d_1 + ... + Z/d_k, optionally with an explicit
/// action of a base ring: action[r][x] is the index of r.x, where module
/// elements are indexed in mixed radix with the first factor most
/// significant. Without a table the base ring must be Z/n with every d_i
/// dividing n, acting through integers.
struct ModuleSpec {
  std::vector<std::uint32_t> orders;
  std::optional<std::vector<std::vector<Elem>>> action;

  std::size_t size() const;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// Constructor tree of a ring.
struct RingSpec {
  enum class Kind { Zmod, Product, PolyQuot, Idealize, MonoidRing, BuiltinInt, BuiltinPolyOverFq };

  Kind kind = Kind::Zmod;
  std::uint32_t n = 0;                  // Zmod modulus; prime of PolyQuot / BuiltinPolyOverFq
  std::vector<std::uint32_t> modulus;   // PolyQuot, coefficients low degree first, monic
  std::vector<RingSpec> parts;          // Product factors; base ring of Idealize / MonoidRing
  ModuleSpec module;                    // Idealize
  std::optional<MonoidTable> monoid;    // MonoidRing

  static RingSpec zmod(std::uint32_t n);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec poly_quot(std::uint32_t p, std::vector<std::uint32_t> modulus);
  static RingSpec idealize(RingSpec base, ModuleSpec module);
  static RingSpec monoid_ring(RingSpec base, MonoidTable monoid);
  static RingSpec integers();
  static RingSpec poly_over_fq(std::uint32_t q);

  bool is_finite() const;
  /// Order of the denoted ring (finite specs only), without materializing.
  Natural order() const;
  /// Canonical syntax, e.g. `prod(Z/4, Z/9)`, `GF(2)[x]/(x^2+x+1)`.
  std::string to_string() const;
};

/// Ring-spec syntax: `Z/6`, `prod(Z/4, Z/9)`, `GF(2)[x]/(x^2+x+1)`,
/// `GF(3)[x]`, `idealize(Z/2, [2,2])`, `monoidring(Z/3, C2)`, `ZZ`.
RingSpec parse_ring_spec(std::string_view text);

struct BuildOptions {
  std::size_t cap = 4096;
  /// Check the commutative ring axioms on all element triples.
  bool verify = false;
};

/// Finite commutative ring with explicit operation tables.
class FiniteRing {
 public:
  /// Raw constructor; throws std::invalid_argument on malformed tables, and
  /// on failed axioms when `verify` is set.
  FiniteRing(std::string name, std::vector<std::string> labels, std::vector<std::uint16_t> add,
             std::vector<std::uint16_t> mul, Elem zero, Elem one, bool verify);

  const std::string& name() const { return name_; }
  std::size_t order() const { return labels_.size(); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * order() + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order() + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  const std::string& label(Elem a) const { return labels_[a]; }
  std::optional<Elem> find(std::string_view label) const;

  /// Exhaustive check of the commutative unital ring axioms. On failure
  /// returns a description.
  std::optional<std::string> axiom_violation() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
};

/// Z or F_q[x] (q prime). Elements are coefficient lists, low degree first;
/// integers use a single signed coefficient.
class EffectiveRing {
 public:
  enum class Kind { Integers, PolyOverFq };
  using Element = std::vector<Natural>;

  static EffectiveRing integers() { return EffectiveRing(Kind::Integers, 0); }
  static EffectiveRing poly_over_fq(std::uint32_t q);

  Kind kind() const { return kind_; }
  std::uint32_t q() const { return q_; }
  std::string name() const;

  Element normalize(Element a) const;
  bool is_zero(const Element& a) const;
  bool is_unit(const Element& a) const;
  /// Both rings are domains: only 0 is a zero-divisor.
  bool is_zero_divisor(const Element& a) const;
  /// Ring product.
  Element mul(const Element& a, const Element& b) const;
  std::string render(const Element& a) const;

  /// Elements in a fixed enumeration order: Z as 0, 1, -1, 2, -2, ...;
  /// F_q[x] by degree, then coefficients.
  Element nth(std::size_t i) const;
  /// First non-zero-divisor non-unit in enumeration order.
  Element find_non_unit_non_zero_divisor() const;

  /// Sampled primes: 2, 3, 5, 7 in Z; x, x+1 and the first monic
  /// irreducible quadratic in F_q[x].
  std::vector<Element> sample_primes() const;

 private:
  EffectiveRing(Kind kind, std::uint32_t q) : kind_(kind), q_(q) {}
  Kind kind_;
  std::uint32_t q_;
};

/// Either a materialized finite ring or a built-in effective ring.
struct RingInstance {
  RingSpec spec;
  std::optional<FiniteRing> finite;
  std::optional<EffectiveRing> effective;
};

/// Materializes a ring. Throws CapExceeded or std::invalid_argument.
RingInstance ring_build(const RingSpec& spec, const BuildOptions& options = {});
FiniteRing build_finite(const RingSpec& spec, const BuildOptions& options = {});

/// Finite abelian group with an action of a finite ring.
class FiniteModule {
 public:
  /// Validates the action: unital, additive in both arguments, associative.
  FiniteModule(const FiniteRing& base, const RingSpec& base_spec, ModuleSpec spec);

  const ModuleSpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }
  Elem add(Elem x, Elem y) const;
  Elem act(Elem r, Elem x) const { return action_[r][x]; }
  std::vector<std::uint32_t> digits(Elem x) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;
  std::string label(Elem x) const;

 private:
  ModuleSpec spec_;
  std::size_t size_;
  std::vector<std::vector<Elem>> action_;
};

struct Ideal {
  Bitset members;
  bool maximal = false;
  std::size_t size() const { return members.count(); }
};

struct UnitsAndZeroDivisors {
  Bitset units;
  Bitset zero_divisors;
};
UnitsAndZeroDivisors units_and_zero_divisors(const FiniteRing& r);

/// All ideals, sorted by size and then members; maximal ones flagged.
std::vector<Ideal> ideals(const FiniteRing& r, std::size_t cap = 4096);
bool is_ideal(const FiniteRing& r, const Bitset& s);
/// Smallest ideal containing `gens`.
Bitset ideal_generated(const FiniteRing& r, const std::vector<Elem>& gens);

struct BalancedResult {
  bool balanced;
  std::optional<Elem> witness;  // a non-zero-divisor that is not a unit
};
BalancedResult is_balanced(const FiniteRing& r);

struct FractionRing {
  FiniteRing ring;
  std::vector<Elem> canonical_map;  // a -> a/1
  bool is_iso;
};
/// Localization at the set of non-zero-divisors.
FractionRing total_fraction_ring(const FiniteRing& r);

struct LocalDecomposition {
  std::vector<Elem> idempotents;  // primitive, pairwise orthogonal, summing to 1
  std::vector<FiniteRing> factors;  // e R with identity e
  bool all_local;
  bool is_iso;  // r -> (e_1 r, ..., e_k r) is a ring isomorphism onto the product
};
LocalDecomposition local_decomposition(const FiniteRing& r);

Ideal annihilator(const FiniteRing& r, const std::vector<Elem>& subset);
bool is_local(const FiniteRing& r);
/// Unique maximal ideal of a local ring; throws std::invalid_argument otherwise.
Bitset maximal_ideal_of_local(const FiniteRing& r);
/// ann(M) != 0 for the maximal ideal M; throws std::invalid_argument if r is not local.
bool depth_zero(const FiniteRing& r_local);
/// Hom(R/M, R) != 0, decided by scanning candidate images y of 1 + M for
/// maps r + M -> r y that are well defined on cosets.
bool hom_nonzero(const FiniteRing& r, const Bitset& maximal_ideal);
/// Hom(R/M, R) != 0 for every maximal ideal M.
bool hom_criterion(const FiniteRing& r);

struct BaerCounterexample {
  Bitset ideal;
  std::vector<std::pair<Elem, Elem>> map;  // full table x -> f(x) on the ideal
};
struct SelfInjectiveResult {
  bool self_injective;
  std::optional<BaerCounterexample> counterexample;
};
/// Baer's criterion: every R-linear I -> R is multiplication by some c.
SelfInjectiveResult is_self_injective(const FiniteRing& r, std::size_t cap = 64);
bool is_r_linear(const FiniteRing& r, const Bitset& ideal, const std::vector<std::pair<Elem, Elem>>& map);
bool is_multiplication_map(const FiniteRing& r, const std::vector<std::pair<Elem, Elem>>& map);

/// Nagata idealization base x M with (r, x)(s, y) = (rs, r.y + s.x).
FiniteRing idealize(const FiniteRing& base, const FiniteModule& m, std::string name, bool verify = false,
                    std::size_t cap = 4096);

/// Subsets containing 1 closed under +, - and *.
std::vector<Bitset> unital_subrings(const FiniteRing& r, std::size_t cap = 32);

struct SubringLawReport {
  std::size_t subrings = 0;
  std::size_t module_subgroups = 0;
  bool all_product_form = true;  // every subring is base x H with H a subgroup
  bool holds() const { return all_product_form && subrings == module_subgroups; }
};
/// For an idealization Z/n x M (spec kind Idealize over Zmod, default action).
SubringLawReport idealization_subring_law(const RingSpec& spec, std::size_t cap = 32);

/// Group ring base[M] of a commutative finite monoid; elements are
/// functions M -> base listed as [f(m_0), f(m_1), ...].
FiniteRing monoid_ring(const FiniteRing& base, const MonoidTable& m, std::string name,
                       bool verify = false, std::size_t cap = 4096);

/// Builds sum_k R/Ann(x_k) -> M, (r_k + Ann(x_k)) -> sum r_k x_k and checks
/// well-definedness, linearity and surjectivity exhaustively. Throws
/// std::invalid_argument if the generators do not generate M.
bool gen_module_surjection(const FiniteRing& base, const FiniteModule& m, const std::vector<Elem>& gens);

struct EffectiveReport {
  bool balanced;
  std::string witness;
  bool depth_zero_all;  // over the sampled primes
  bool hom_nonzero_any;
  std::vector<std::string> primes;
};
/// The checks available for Z and F_q[x]: the witness w is nonzero and not
/// a unit; for each sampled prime p, ann(p) = 0 so R_(p) has positive depth
/// and Hom(R/(p), R) = 0.
EffectiveReport check_effective(const EffectiveRing& r);

}  // namespace cardalg
