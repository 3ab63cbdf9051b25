#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "addcomb/errors.hpp"
#include "addcomb/gset.hpp"
#include "addcomb/instance_io.hpp"
#include "support/helpers.hpp"

using namespace addcomb;
using testing_support::cyc;
using testing_support::vec;
using testing_support::win;

TEST(Sumset, Examples) {
  EXPECT_EQ(vec(sumset(cyc(7, {0}), cyc(7, {0}))), (oracle::Vec{0}));
  EXPECT_EQ(vec(sumset(win({0, 1, 3}), win({0, 1, 3}))), (oracle::Vec{0, 1, 2, 3, 4, 6}));
  EXPECT_EQ(vec(sumset(cyc(7, {0, 1}), cyc(7, {0, 2}))), (oracle::Vec{0, 1, 2, 3}));
}

TEST(Sumset, EmptyOperandGivesEmpty) {
  auto g = GroupSpec::cyclic(9);
  EXPECT_TRUE(sumset(GSet::empty_in(g), cyc(9, {1, 2})).empty());
  EXPECT_TRUE(sumset(cyc(9, {1}), GSet::empty_in(g)).empty());
}

TEST(Sumset, GroupMismatchThrows) {
  EXPECT_THROW(sumset(cyc(7, {0}), cyc(11, {0})), GroupMismatch);
  EXPECT_THROW(sumset(cyc(7, {0}), win({0})), GroupMismatch);
}

TEST(Sumset, WindowOverflowThrows) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  GSet a(GroupSpec::window(big - 1, big), {big - 1, big});
  EXPECT_THROW(sumset(a, a), OverflowError);
}

TEST(DifferenceSet, Examples) {
  EXPECT_EQ(vec(difference_set(cyc(11, {5}), cyc(11, {5}))), (oracle::Vec{0}));
  auto a = cyc(7, {0, 1, 3});
  EXPECT_EQ(vec(difference_set(a, a)), (oracle::Vec{0, 1, 2, 3, 4, 5, 6}));
  auto w = win({0, 1, 3});
  EXPECT_EQ(vec(difference_set(w, w)), (oracle::Vec{-3, -2, -1, 0, 1, 2, 3}));
}

TEST(IteratedSum, Examples) {
  EXPECT_EQ(vec(iterated_sum(cyc(13, {0}), 5)), (oracle::Vec{0}));
  EXPECT_EQ(vec(iterated_sum(cyc(101, {0, 1}), 3)), (oracle::Vec{0, 1, 2, 3}));
  auto w = win({0, 1, 3});
  EXPECT_EQ(iterated_sum(w, 2), sumset(w, w));
  EXPECT_EQ(iterated_sum(w, 1), w);
  EXPECT_THROW(iterated_sum(w, 0), DomainError);
}

TEST(Dilate, Examples) {
  EXPECT_EQ(vec(dilate(cyc(7, {0, 1, 2}), 1)), (oracle::Vec{0, 1, 2}));
  EXPECT_EQ(vec(dilate(cyc(7, {0, 2, 4}), 4)), (oracle::Vec{0, 1, 2}));
  EXPECT_EQ(vec(translate(cyc(5, {0, 1}), 4)), (oracle::Vec{0, 4}));
  EXPECT_THROW(dilate(cyc(10, {1, 2}), 4), DomainError);
  EXPECT_EQ(vec(dilate(cyc(10, {1, 2}), 4, false)), (oracle::Vec{4, 8}));
}

TEST(Doubling, Examples) {
  GSet ap = GSet::progression(GroupSpec::window(0, 9), 0, 1, 10);
  EXPECT_EQ(doubling_ratio(ap).sum, make_rational(19, 10));
  EXPECT_EQ(doubling_ratio(cyc(5, {0})).sum, make_rational(1));
  auto r = doubling_ratio(win({0, 1, 3}));
  EXPECT_EQ(r.sum, make_rational(2));
  EXPECT_EQ(r.difference, make_rational(7, 3));
  EXPECT_EQ(r.min, make_rational(2));
  EXPECT_THROW(doubling_ratio(GSet::empty_in(GroupSpec::cyclic(5))), DomainError);
}

TEST(GSetInvariants, CanonicalAndMembership) {
  GSet s(GroupSpec::cyclic(10), {7, 3, 3, 0});
  EXPECT_EQ(vec(s), (oracle::Vec{0, 3, 7}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_THROW(GSet(GroupSpec::cyclic(10), {10}), DomainError);
  EXPECT_THROW(GroupSpec::cyclic(0), DomainError);
  EXPECT_THROW(GroupSpec::torsion(1, 3), DomainError);
  EXPECT_THROW(GroupSpec::window(3, 2), DomainError);
}

TEST(Torsion, CodesAreLexicographic) {
  auto g = GroupSpec::torsion(3, 2);
  std::vector<std::int64_t> a{1, 2}, b{2, 0};
  EXPECT_LT(g.encode(a), g.encode(b));
  EXPECT_EQ(g.element(g.encode(a)).coordinates, a);
  std::vector<std::int64_t> c{2, 2};
  EXPECT_EQ(g.element(g.add(g.encode(a), g.encode(c))).coordinates, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(g.order(), 9);
}

// The dense-indicator path, the pairwise path and std::set agree.
TEST(Sumset, DenseAndPairwiseMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 400)(rng);
    std::size_t sa = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
    std::size_t sb = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
    auto a = oracle::random_subset(rng, n, sa);
    auto b = oracle::random_subset(rng, n, sb);
    auto expect = oracle::sumset_mod(a, b, n);
    EXPECT_EQ(vec(detail::sumset_dense(cyc(n, a), cyc(n, b))), expect);
    EXPECT_EQ(vec(detail::sumset_pairwise(cyc(n, a), cyc(n, b))), expect);
    EXPECT_EQ(vec(difference_set(cyc(n, a), cyc(n, b))), oracle::diffset_mod(a, b, n));
  }
}

TEST(Sumset, WindowMatchesOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_subset(rng, 500, 1 + rng() % 40);
    auto b = oracle::random_subset(rng, 500, 1 + rng() % 40);
    for (auto& x : b) x -= 250;
    GSet ga(GroupSpec::window(0, 499), std::vector<Code>(a.begin(), a.end()));
    GSet gb(GroupSpec::window(-250, 249), std::vector<Code>(b.begin(), b.end()));
    EXPECT_EQ(vec(sumset(ga, gb)), oracle::sumset_int(a, b));
  }
}

TEST(InstanceIo, RoundTrip) {
  auto t = GroupSpec::torsion(2, 3);
  GSet s = parse_elements_text(t, "[[1,0,1],[0,0,1]]");
  EXPECT_EQ(s.size(), 2u);
  auto doc = instance_to_json(s);
  EXPECT_EQ(doc["elements"][0].dump(), "[0,0,1]");
  EXPECT_EQ(instance_from_json(nlohmann::json::parse(doc.dump())), s);

  GSet c = parse_elements_text(parse_group_text("cyclic:13"), "12,0,5");
  EXPECT_EQ(vec(c), (oracle::Vec{0, 5, 12}));
  EXPECT_EQ(instance_to_json(c).dump(), R"({"group":{"type":"cyclic","modulus":13},"elements":[0,5,12]})");
  EXPECT_EQ(parse_group_text("window:-3:4"), GroupSpec::window(-3, 4));
  EXPECT_THROW(parse_group_text("ring:5"), Error);
}
