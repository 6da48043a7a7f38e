#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cardalg/bitset.hpp"
#include "cardalg/cap.hpp"
#include "cardalg/cardinal.hpp"

namespace cardalg {

/// Finite abelian group Z/q_1 + ... + Z/q_k with every q_i a prime power.
/// Elements are indexed in mixed radix, first factor most significant.
class FinAbGroup {
 public:
  /// Accepts arbitrary cyclic orders >= 1 and splits them into prime powers.
  explicit FinAbGroup(const std::vector<std::uint64_t>& cyclic_orders);

  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::size_t order() const { return order_; }
  std::uint32_t zero() const { return 0; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::vector<std::uint32_t> tuple(std::uint32_t a) const;
  std::string label(std::uint32_t a) const;

 private:
  std::vector<std::uint32_t> factors_;
  std::size_t order_ = 1;
};

/// All subgroups, each as its member set, sorted by size then members.
std::vector<Bitset> subgroups(const FinAbGroup& g, std::size_t cap = 128);
/// Subgroup generated by `gens`.
Bitset subgroup_generated(const FinAbGroup& g, const std::vector<std::uint32_t>& gens);

/// Scans the subgroups for a proper one of full order.
bool has_proper_same_card_subgroup(const FinAbGroup& g, std::size_t cap = 128);

/// Z/p^n has exactly n+1 subgroups, one of each order p^k, forming a chain.
bool prufer_truncation_check(std::uint32_t p, std::uint32_t n);

/// One summand of a group specification.
struct GroupAtom {
  enum class Kind { FiniteAb, Free, Prufer, CountableSum };
  Kind kind = Kind::FiniteAb;
  std::vector<std::uint64_t> orders;  // FiniteAb
  std::uint32_t n = 0;                // Free rank, Prufer prime
  std::vector<GroupAtom> inner;       // CountableSum: the repeated atom

  static GroupAtom finite(std::vector<std::uint64_t> orders);
  static GroupAtom free(std::uint32_t rank);
  static GroupAtom prufer(std::uint32_t p);
  static GroupAtom countable_sum(GroupAtom atom);

  bool is_trivial() const;
  Cardinal cardinality() const;
  std::string to_string() const;
  friend bool operator==(const GroupAtom&, const GroupAtom&) = default;
};

/// Formal direct sum of atoms; denotes a countable abelian group.
struct GroupSpec {
  std::vector<GroupAtom> atoms;

  Cardinal cardinality() const;
  /// `fin(4,9) + free(2) + prufer(3) + sum_inf(fin(2))`; the empty sum is `fin()`.
  std::string to_string() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec parse_group_spec(std::string_view text);

enum class GroupClass { Finite, Prufer, HasProperSameCardSubgroup };
std::string to_string(GroupClass c);

GroupClass classify(const GroupSpec& spec);

/// How a witness subgroup is obtained from one atom of the input.
enum class AtomMap {
  Full,              // the whole summand
  Zero,              // the trivial subgroup
  Doubled,           // 2Z in the first coordinate of a free summand
  DropFirstSummand,  // all but the first copy of a countable sum
};

/// A proper subgroup of the same cardinality, described atomwise, with an
/// element of the group outside it.
struct SameCardWitness {
  GroupSpec group;
  std::vector<AtomMap> maps;  // one per atom of `group`
  GroupSpec subgroup;         // the subgroup as an abstract group
  std::string outside;        // element of `group` not in the subgroup
  std::size_t outside_atom;   // atom carrying that element
  std::string rule;           // which construction was used
};

/// Throws std::invalid_argument when classify(spec) is Finite or Prufer.
SameCardWitness same_card_subgroup_witness(const GroupSpec& spec);

/// Independently checks a witness: the atom maps give subgroups, the
/// outside element lies in its atom but not in the mapped subgroup, and
/// the cardinalities agree under the cardinal rewriting engine.
bool validate_witness(const SameCardWitness& w, std::string* why = nullptr);

}  // namespace cardalg
