#pragma once

#include "cardalg/cardinal.hpp"
#include "cardalg/trace.hpp"

namespace cardalg {

// Each operation builds the corresponding expression, rewrites it to normal
// form and, if `trace` is given, stores the derivation there. Preconditions
// are reported as EvalError.

Cardinal normalize(const Cardinal& c, Mode mode, DerivationTrace* trace = nullptr);

Cardinal card_add(const Cardinal& a, const Cardinal& b, Mode mode, DerivationTrace* trace = nullptr);
Cardinal card_mul(const Cardinal& a, const Cardinal& b, Mode mode, DerivationTrace* trace = nullptr);
Cardinal card_pow(const Cardinal& base, const Cardinal& exponent, Mode mode,
                  DerivationTrace* trace = nullptr);

/// Normalizes both sides in `mode`, then compares.
CompareResult card_compare(const Cardinal& a, const Cardinal& b, Mode mode);

/// Sum over an infinite index set of a family with lo <= |A_k| <= hi.
Cardinal card_sum_family(const Cardinal& index, const Cardinal& lo, const Cardinal& hi,
                         Mode mode = Mode::ZFC, DerivationTrace* trace = nullptr);
/// Product over an infinite index set of a family with lo <= |A_k| <= hi.
Cardinal card_prod_family(const Cardinal& index, const Cardinal& lo, const Cardinal& hi,
                          Mode mode = Mode::ZFC, DerivationTrace* trace = nullptr);
/// Number of finite subsets of a set of cardinality s.
Cardinal card_finsets(const Cardinal& s, Mode mode = Mode::ZFC, DerivationTrace* trace = nullptr);
/// Cardinality of the direct sum of s copies of a module of cardinality m.
Cardinal card_directsum(const Cardinal& m, const Cardinal& s, Mode mode = Mode::ZFC,
                        DerivationTrace* trace = nullptr);

}  // namespace cardalg
