#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "cardalg/natural.hpp"

namespace cardalg {

/// m + (m+n)(m+n+1)/2, a bijection N x N -> N.
Natural cantor_pair(const Natural& m, const Natural& n);
std::pair<Natural, Natural> cantor_unpair(const Natural& k);

/// Sum of 2^i over i in s, a bijection Fin(N) -> N.
Natural finset_encode(const std::set<std::size_t>& s);
std::set<std::size_t> finset_decode(const Natural& k);

/// A sequence N -> N with finite support. Only nonzero values are stored.
class FinSupportSeq {
 public:
  FinSupportSeq() = default;
  /// Throws std::invalid_argument if any value is zero.
  explicit FinSupportSeq(std::map<std::size_t, Natural> support);

  /// Setting a value to zero removes the index from the support.
  void set(std::size_t index, Natural value);
  Natural at(std::size_t index) const;
  const std::map<std::size_t, Natural>& support() const { return support_; }

  friend bool operator==(const FinSupportSeq&, const FinSupportSeq&) = default;

 private:
  std::map<std::size_t, Natural> support_;
};

/// Code layout: the empty sequence is 0. Otherwise, with support
/// i_1 < ... < i_k and values v_1, ..., v_k,
///
///   code = 1 + pair(finset_encode({i_1..i_k}) - 1, fold)
///   fold = pair(v_1 - 1, pair(v_2 - 1, ... pair(v_{k-1} - 1, v_k - 1)))
///
/// (for k = 1 the fold is v_1 - 1). This is a bijection onto N.
Natural finsupp_encode(const FinSupportSeq& f);
FinSupportSeq finsupp_decode(const Natural& k);

}  // namespace cardalg
