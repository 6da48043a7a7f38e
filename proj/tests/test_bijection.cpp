#include <gtest/gtest.h>

#include <set>

#include "cardalg/bijection.hpp"
#include "oracles.hpp"

using namespace cardalg;

TEST(CantorPair, Examples) {
  EXPECT_EQ(cantor_pair(0, 0), 0);
  EXPECT_EQ(cantor_pair(1, 1), 4);
  EXPECT_EQ(cantor_pair(0, 3), 6);
  EXPECT_EQ(cantor_unpair(0), std::make_pair(Natural(0), Natural(0)));
  EXPECT_EQ(cantor_unpair(4), std::make_pair(Natural(1), Natural(1)));
}

TEST(CantorPair, MatchesDiagonalWalk) {
  const auto walk = oracle::diagonal_walk(60);
  for (std::size_t k = 0; k < walk.size(); ++k) {
    EXPECT_EQ(cantor_pair(walk[k].first, walk[k].second), k);
    EXPECT_EQ(cantor_unpair(k), std::make_pair(Natural(walk[k].first), Natural(walk[k].second)));
  }
}

TEST(CantorPair, BigArguments) {
  const Natural m = parse_natural("123456789012345678901234567890");
  const Natural n = parse_natural("987654321098765432109876543210");
  const Natural k = cantor_pair(m, n);
  EXPECT_EQ(cantor_unpair(k), std::make_pair(m, n));
  EXPECT_EQ(cantor_unpair(1000000), cantor_unpair(cantor_pair(cantor_unpair(1000000).first,
                                                              cantor_unpair(1000000).second)));
}

TEST(CantorPairProperty, RoundTripGrid) {
  for (unsigned m = 0; m <= 300; ++m)
    for (unsigned n = 0; n <= 300; ++n) ASSERT_EQ(cantor_unpair(cantor_pair(m, n)), std::make_pair(Natural(m), Natural(n)));
}

TEST(CantorPairProperty, DiagonalPrefixesAreIntervals) {
  for (unsigned d = 0; d <= 100; ++d) {
    std::set<Natural> codes;
    for (unsigned m = 0; m <= d; ++m)
      for (unsigned n = 0; m + n <= d; ++n) codes.insert(cantor_pair(m, n));
    const unsigned size = (d + 1) * (d + 2) / 2;
    ASSERT_EQ(codes.size(), size);
    EXPECT_EQ(*codes.begin(), 0);
    EXPECT_EQ(*codes.rbegin(), size - 1);
  }
}

TEST(Finset, Examples) {
  EXPECT_EQ(finset_encode({}), 0);
  EXPECT_EQ(finset_encode({0, 2, 3}), 13);
  EXPECT_EQ(finset_decode(13), (std::set<std::size_t>{0, 2, 3}));
  EXPECT_EQ(finset_decode(0), std::set<std::size_t>{});
  EXPECT_EQ(finset_encode({100}), pow2(100));
}

TEST(FinsetProperty, RoundTripAndInjective) {
  oracle::Rng rng(51);
  std::map<Natural, std::set<std::size_t>> seen;
  for (int i = 0; i < 20000; ++i) {
    std::set<std::size_t> s;
    for (std::uint64_t k = rng.below(10); k > 0; --k) s.insert(rng.below(200));
    const Natural code = finset_encode(s);
    EXPECT_EQ(finset_decode(code), s);
    const auto [it, fresh] = seen.emplace(code, s);
    if (!fresh) EXPECT_EQ(it->second, s);
  }
  for (unsigned k = 0; k < 5000; ++k) EXPECT_EQ(finset_encode(finset_decode(k)), k);
}

TEST(FinSupport, ZeroMeansAbsent) {
  FinSupportSeq f;
  f.set(4, 7);
  f.set(2, 1);
  EXPECT_EQ(f.support().size(), 2u);
  f.set(4, 0);
  EXPECT_EQ(f.support().size(), 1u);
  EXPECT_EQ(f.at(4), 0);
  EXPECT_EQ(f.at(2), 1);
  EXPECT_THROW(FinSupportSeq({{1, Natural(0)}}), std::invalid_argument);
}

TEST(FinSupport, Examples) {
  EXPECT_EQ(finsupp_encode(FinSupportSeq()), 0);
  EXPECT_TRUE(finsupp_decode(0).support().empty());
  // {3 -> 5}: 1 + pair(2^3 - 1, 5 - 1) = 1 + pair(7, 4) = 1 + 7 + 66
  const FinSupportSeq f({{3, Natural(5)}});
  EXPECT_EQ(finsupp_encode(f), 74);
  EXPECT_EQ(finsupp_decode(74), f);
}

TEST(FinSupportProperty, RoundTripAndInjective) {
  oracle::Rng rng(52);
  std::map<Natural, FinSupportSeq> seen;
  for (int i = 0; i < 20000; ++i) {
    FinSupportSeq f;
    for (std::uint64_t k = rng.below(9); k > 0; --k) f.set(rng.below(40), rng.range(1, 1000));
    const Natural code = finsupp_encode(f);
    EXPECT_EQ(finsupp_decode(code), f);
    const auto [it, fresh] = seen.emplace(code, f);
    if (!fresh) EXPECT_EQ(it->second, f);
  }
}

TEST(FinSupportProperty, EveryCodeDecodes) {
  for (unsigned k = 0; k < 20000; ++k) ASSERT_EQ(finsupp_encode(finsupp_decode(k)), k) << k;
}
