#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cardalg {

/// Arbitrary-precision integer. Used for naturals throughout; callers keep
/// values nonnegative where a natural is expected.
using Natural = boost::multiprecision::mpz_int;

/// Parses a nonempty run of decimal digits. Throws std::invalid_argument.
Natural parse_natural(std::string_view digits);

inline std::string to_string(const Natural& n) { return n.str(); }

/// 2^k as a Natural.
Natural pow2(std::uint64_t k);

/// Exact b^e; throws std::length_error when the result would exceed
/// `max_bits` bits.
Natural checked_pow(const Natural& base, const Natural& exponent,
                    std::uint64_t max_bits = 1u << 22);

}  // namespace cardalg
