#include "cardalg/natural.hpp"

#include <stdexcept>

namespace cardalg {

Natural parse_natural(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty natural");
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("not a natural: " + std::string(digits));
  return Natural(std::string(digits));
}

Natural pow2(std::uint64_t k) {
  Natural r = 0;
  boost::multiprecision::bit_set(r, static_cast<unsigned>(k));
  return r;
}

Natural checked_pow(const Natural& base, const Natural& exponent, std::uint64_t max_bits) {
  if (exponent == 0) return 1;
  if (base == 0 || base == 1) return base;
  const auto base_bits = static_cast<std::uint64_t>(boost::multiprecision::msb(base)) + 1;
  // (bits(base) - 1) * e is a lower bound on bits(result) - 1
  if (exponent > Natural(max_bits) ||
      (base_bits - 1) * exponent.convert_to<std::uint64_t>() > max_bits)
    throw std::length_error("finite power exceeds " + std::to_string(max_bits) + " bits");
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

}  // namespace cardalg
