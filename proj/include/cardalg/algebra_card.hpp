#pragma once

#include "cardalg/cardinal.hpp"
#include "cardalg/trace.hpp"

namespace cardalg {

/// |R[M]| for a nonzero ring R and a monoid M.
Cardinal card_monoid_ring(const Cardinal& r, const Cardinal& m, Mode mode = Mode::ZFC,
                          DerivationTrace* trace = nullptr);
/// |R[x_k : k in S]| for a nonzero ring R and |S| >= 1.
Cardinal card_poly_ring(const Cardinal& r, const Cardinal& s, Mode mode = Mode::ZFC,
                        DerivationTrace* trace = nullptr);
/// |R[[x]]| for a nonzero ring R.
Cardinal card_power_series(const Cardinal& r, Mode mode = Mode::ZFC, DerivationTrace* trace = nullptr);
/// |T(R)|, the total ring of fractions.
Cardinal card_fraction_ring(const Cardinal& r, Mode mode = Mode::ZFC,
                            DerivationTrace* trace = nullptr);

}  // namespace cardalg
