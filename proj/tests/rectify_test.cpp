#include <gtest/gtest.h>

#include <random>

#include "addcomb/errors.hpp"
#include "addcomb/rectify.hpp"
#include "support/helpers.hpp"

using namespace addcomb;
using testing_support::cyc;
using testing_support::vec;
using testing_support::win;

TEST(Diameter, Examples) {
  auto w = diameter(cyc(7, {0, 1, 2}));
  EXPECT_EQ(w.length, 2);
  EXPECT_EQ(w.dilation, 1);
  EXPECT_TRUE(w.contained);

  auto w2 = diameter(cyc(7, {0, 2, 4}));
  EXPECT_EQ(w2.length, 2);
  EXPECT_EQ(w2.dilation, 2);
  EXPECT_EQ(w2.shift, 0);
  EXPECT_EQ(vec(w2.normalized), (oracle::Vec{0, 1, 2}));

  EXPECT_EQ(diameter(GSet::whole(GroupSpec::cyclic(13))).length, 12);
  EXPECT_EQ(diameter(cyc(1, {0})).length, 0);
}

TEST(Diameter, ProgressionWitness) {
  auto a = cyc(101, {3, 10, 17, 24});
  auto w = diameter(a);
  EXPECT_EQ(w.length, 3);
  for (auto x : a) {
    auto steps = mod((x - w.shift) * inverse_mod(w.dilation, 101), 101);
    EXPECT_LE(steps, w.length);
  }
}

TEST(Diameter, MatchesBruteForce) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 60);
    auto v = oracle::random_subset(rng, n, 1 + rng() % 7);
    EXPECT_EQ(diameter(cyc(n, v)).length, oracle::diameter_brute(v, n)) << n;
  }
}

TEST(Diameter, BudgetAndGroupChecks) {
  EXPECT_THROW(diameter(cyc(1009, {0, 5}), 1000), BudgetExceeded);
  EXPECT_THROW(diameter(win({0, 1})), GroupMismatch);
  EXPECT_THROW(diameter(GSet::empty_in(GroupSpec::cyclic(7))), DomainError);
}

TEST(Lev, IntervalIsItsOwnWitness) {
  auto b = GSet::progression(GroupSpec::cyclic(101), 0, 1, 5);
  auto r = lev_interval(b, make_rational(1, 4), make_rational(1, 5));
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.interval.start, 0);
  EXPECT_EQ(r.interval.length, 4);
  EXPECT_EQ(r.exceptions, 0u);
  EXPECT_TRUE(r.conclusion_holds);
}

TEST(Lev, WholeGroupNotApplicable) {
  auto r = lev_interval(GSet::whole(GroupSpec::cyclic(29)), make_rational(1, 10), make_rational(1, 10));
  EXPECT_FALSE(r.applicable);
  EXPECT_NEAR(r.coefficient, 0.0, 1e-9);
}

TEST(Lev, ParameterChecks) {
  auto b = cyc(11, {0});
  EXPECT_THROW(lev_interval(b, make_rational(0), make_rational(1, 10)), DomainError);
  EXPECT_THROW(lev_interval(b, make_rational(1, 10), make_rational(1, 2)), DomainError);
}

TEST(GapCover, Examples) {
  auto r = gap_cover(cyc(31, {0, 1, 2}), 29, 4);
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_EQ(r.exceptions, 0u);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_EQ(r.interval.start, 0);
  EXPECT_EQ(r.interval.length, 4);

  auto s = gap_cover(cyc(31, {17}), 0, 0);
  EXPECT_TRUE(s.hypothesis_holds);
  EXPECT_TRUE(s.conclusion_holds);
  EXPECT_TRUE(s.interval.contains(17, 31));

  EXPECT_THROW(gap_cover(cyc(31, {0}), 0, 11), DomainError);
}

TEST(GapCover, WrapsAroundZero) {
  auto r = gap_cover(cyc(31, {29, 30, 0, 1}), 28, 6);
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_EQ(r.interval.start, 29);
}

TEST(DiamSpectrum, Examples) {
  auto a = GSet::progression(GroupSpec::cyclic(101), 0, 1, 5);
  auto r = diam_from_spectrum(a, make_rational(1, 5));
  EXPECT_NEAR(r.threshold, 8.2, 1e-12);
  EXPECT_TRUE(r.hypothesis_met);
  EXPECT_EQ(r.true_diameter, 4);
  EXPECT_TRUE(r.conclusion_holds);

  auto s = diam_from_spectrum(cyc(101, {7}), make_rational(1, 10));
  EXPECT_TRUE(s.hypothesis_met);
  EXPECT_EQ(s.true_diameter, 0);
  EXPECT_TRUE(s.conclusion_holds);

  EXPECT_THROW(diam_from_spectrum(cyc(100, {0}), make_rational(1, 10)), DomainError);
  EXPECT_THROW(diam_from_spectrum(cyc(101, {0}), make_rational(1, 3)), DomainError);
}

TEST(DiamSpectrum, DilatedProgression) {
  auto a = GSet::progression(GroupSpec::cyclic(211), 5, 37, 6);
  auto r = diam_from_spectrum(a, make_rational(1, 5));
  ASSERT_TRUE(r.hypothesis_met);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_EQ(r.true_diameter, 5);
}

TEST(FreimanIso, Examples) {
  auto a = win({0, 1, 2});
  std::vector<Code> id{0, 1, 2};
  EXPECT_TRUE(freiman_iso_check(a, a.group(), id, 4).is_isomorphism);

  std::vector<Code> bad{0, 1, 3};
  auto r = freiman_iso_check(a, GroupSpec::window(0, 3), bad, 2);
  ASSERT_FALSE(r.is_isomorphism);
  ASSERT_EQ(r.first.size(), 2u);
  ASSERT_EQ(r.second.size(), 2u);
  Code ds1 = 0, ds2 = 0, is1 = 0, is2 = 0;
  for (auto i : r.first) ds1 += a[i], is1 += bad[i];
  for (auto i : r.second) ds2 += a[i], is2 += bad[i];
  EXPECT_NE(ds1 == ds2, is1 == is2);
  // 0 + 2 = 1 + 1 while 0 + 3 != 1 + 1
  EXPECT_EQ(ds1, 2);
  EXPECT_EQ(ds2, 2);

  auto c = win({-4, 0, 3, 7, 20}, -10, 30);
  std::vector<Code> affine;
  for (auto x : c) affine.push_back(2 * x + 5);
  EXPECT_TRUE(freiman_iso_check(c, GroupSpec::window(-10, 100), affine, 3).is_isomorphism);
}

TEST(FreimanIso, RejectsNonInjective) {
  auto a = win({0, 1, 2});
  std::vector<Code> f{0, 0, 1};
  EXPECT_THROW(freiman_iso_check(a, a.group(), f, 2), DomainError);
}

TEST(FreimanIso, AgreesWithTuplePairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    auto a = oracle::random_subset(rng, 12, 1 + rng() % 5);
    auto b = oracle::random_subset(rng, 12, a.size());
    std::shuffle(b.begin(), b.end(), rng);
    int k = 2 + static_cast<int>(rng() % 2);
    GSet ga(GroupSpec::window(0, 11), std::vector<Code>(a.begin(), a.end()));
    std::vector<Code> img(b.begin(), b.end());
    auto dom = [&](const std::vector<std::size_t>& t) {
      std::int64_t s = 0;
      for (auto i : t) s += a[i];
      return s;
    };
    auto im = [&](const std::vector<std::size_t>& t) {
      std::int64_t s = 0;
      for (auto i : t) s += b[i];
      return s;
    };
    EXPECT_EQ(freiman_iso_check(ga, GroupSpec::window(0, 11), img, k).is_isomorphism,
              oracle::freiman_brute(a.size(), k, dom, im));
  }
}

TEST(FreimanIso, Budget) {
  auto a = GSet::progression(GroupSpec::window(0, 99), 0, 1, 40);
  std::vector<Code> id(a.begin(), a.end());
  EXPECT_THROW(freiman_iso_check(a, a.group(), id, 6, 1000), BudgetExceeded);
}

TEST(Rectify, Examples) {
  auto r = rectify(cyc(7, {1, 2, 3}), 2);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.diameter.length, 2);
  EXPECT_EQ(vec(r.witness->image), (oracle::Vec{0, 1, 2}));
  EXPECT_TRUE(r.witness->verified);

  auto whole = rectify(GSet::whole(GroupSpec::cyclic(11)), 2);
  EXPECT_FALSE(whole.success);
  EXPECT_EQ(whole.diameter.length, 10);
  EXPECT_FALSE(whole.witness.has_value());

  auto r3 = rectify(cyc(23, {0, 5, 10}), 3);
  ASSERT_TRUE(r3.success);
  EXPECT_EQ(r3.diameter.length, 2);
  EXPECT_EQ(vec(r3.witness->image), (oracle::Vec{0, 1, 2}));
  EXPECT_TRUE(r3.witness->verified);

  EXPECT_THROW(rectify(cyc(21, {0, 1}), 2), DomainError);
  EXPECT_THROW(rectify(cyc(23, {0, 1}), 1), DomainError);
}

TEST(Rectify, WitnessReplays) {
  auto a = cyc(101, {4, 30, 56, 95});
  auto r = rectify(a, 2);
  ASSERT_TRUE(r.success);
  const auto& w = *r.witness;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(w.images[i], mod(w.dilation * (a[i] - w.shift), 101));
    EXPECT_TRUE(w.image.contains(w.images[i]));
  }
}

TEST(IntegerModel, Examples) {
  auto m = minimal_integer_model(win({1, 2, 3}, 0, 10), 2);
  EXPECT_EQ(vec(m.model), (oracle::Vec{1, 2, 3}));
  EXPECT_TRUE(m.composite_certified);

  auto m2 = minimal_integer_model(win({1, 11, 21}, 0, 30), 2);
  EXPECT_EQ(vec(m2.model), (oracle::Vec{1, 2, 3}));
  EXPECT_TRUE(m2.composite_certified);
  ASSERT_FALSE(m2.rounds.empty());
  EXPECT_EQ(m2.rounds[0].prime, 43);

  auto m3 = minimal_integer_model(win({5}), 2);
  EXPECT_EQ(vec(m3.model), (oracle::Vec{1}));

  EXPECT_THROW(minimal_integer_model(cyc(7, {1}), 2), GroupMismatch);
}

TEST(IntegerModel, NeverGrows) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto v = oracle::random_subset(rng, 200, 2 + rng() % 4);
    for (auto& x : v) x += 1;
    GSet a(GroupSpec::window(1, 200), std::vector<Code>(v.begin(), v.end()));
    auto m = minimal_integer_model(a, 2);
    EXPECT_EQ(m.model.size(), a.size());
    EXPECT_LE(m.model.max(), a.max() - a.min() + 1);
    EXPECT_EQ(m.model.min(), 1);
    EXPECT_TRUE(m.composite_certified);
  }
}
