#include "cardalg/bijection.hpp"

#include <stdexcept>
#include <vector>

namespace cardalg {

Natural cantor_pair(const Natural& m, const Natural& n) {
  const Natural s = m + n;
  return m + s * (s + 1) / 2;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& k) {
  // Largest w with w(w+1)/2 <= k.
  Natural w = (boost::multiprecision::sqrt(Natural(8 * k + 1)) - 1) / 2;
  const Natural m = k - w * (w + 1) / 2;
  return {m, w - m};
}

Natural finset_encode(const std::set<std::size_t>& s) {
  Natural k = 0;
  for (std::size_t i : s) boost::multiprecision::bit_set(k, static_cast<unsigned>(i));
  return k;
}

std::set<std::size_t> finset_decode(const Natural& k) {
  if (k < 0) throw std::invalid_argument("finset_decode: negative code");
  std::set<std::size_t> s;
  if (k == 0) return s;
  const unsigned top = boost::multiprecision::msb(k);
  for (unsigned i = boost::multiprecision::lsb(k); i <= top; ++i)
    if (boost::multiprecision::bit_test(k, i)) s.insert(i);
  return s;
}

FinSupportSeq::FinSupportSeq(std::map<std::size_t, Natural> support) : support_(std::move(support)) {
  for (const auto& [i, v] : support_)
    if (v <= 0) throw std::invalid_argument("FinSupportSeq: stored values must be positive");
}

void FinSupportSeq::set(std::size_t index, Natural value) {
  if (value < 0) throw std::invalid_argument("FinSupportSeq: negative value");
  if (value == 0)
    support_.erase(index);
  else
    support_[index] = std::move(value);
}

Natural FinSupportSeq::at(std::size_t index) const {
  auto it = support_.find(index);
  return it == support_.end() ? Natural(0) : it->second;
}

Natural finsupp_encode(const FinSupportSeq& f) {
  const auto& sup = f.support();
  if (sup.empty()) return 0;
  std::set<std::size_t> indices;
  std::vector<Natural> values;
  for (const auto& [i, v] : sup) {
    indices.insert(i);
    values.push_back(v - 1);
  }
  Natural fold = values.back();
  for (std::size_t j = values.size() - 1; j-- > 0;) fold = cantor_pair(values[j], fold);
  return 1 + cantor_pair(finset_encode(indices) - 1, fold);
}

FinSupportSeq finsupp_decode(const Natural& k) {
  if (k < 0) throw std::invalid_argument("finsupp_decode: negative code");
  FinSupportSeq f;
  if (k == 0) return f;
  auto [set_code, fold] = cantor_unpair(k - 1);
  const std::set<std::size_t> indices = finset_decode(set_code + 1);
  std::size_t remaining = indices.size();
  for (std::size_t i : indices) {
    if (--remaining == 0) {
      f.set(i, fold + 1);
    } else {
      auto [v, rest] = cantor_unpair(fold);
      f.set(i, v + 1);
      fold = std::move(rest);
    }
  }
  return f;
}

}  // namespace cardalg
