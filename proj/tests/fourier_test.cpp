#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "addcomb/covering.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "support/helpers.hpp"

using namespace addcomb;
using testing_support::cyc;
using testing_support::win;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

TEST(Spectrum, WholeGroupIsFlatAtZero) {
  auto s = spectrum(GSet::whole(GroupSpec::cyclic(64)));
  EXPECT_NEAR(s.max_magnitude, 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(s.magnitudes[0], 64.0);
}

TEST(Spectrum, SingletonHasUnitMagnitudes) {
  for (auto method : {SpectrumMethod::kDirect, SpectrumMethod::kFast}) {
    auto s = spectrum(cyc(37, {0}), method);
    for (double m : s.magnitudes) EXPECT_NEAR(m, 1.0, 1e-12);
    EXPECT_EQ(s.max_index, 1);
  }
}

TEST(Spectrum, DirichletKernel) {
  for (std::int64_t n : {17, 101, 1000, 4093})
    for (std::int64_t l : {1, 2, 5, 16}) {
      auto b = GSet::progression(GroupSpec::cyclic(n), 0, 1, l);
      double closed = std::abs(std::sin(std::numbers::pi * l / n) / std::sin(std::numbers::pi / n));
      EXPECT_LE(rel(std::abs(fourier_coefficient(b, 1)), closed), 1e-9);
      EXPECT_LE(rel(spectrum(b, SpectrumMethod::kFast).magnitudes[1], closed), 1e-9);
    }
}

TEST(Spectrum, DirectFastAndOracleAgree) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 3000);
    auto v = oracle::random_subset(rng, n, 1 + rng() % 50);
    auto b = cyc(n, v);
    auto d = transform_direct(b);
    auto f = transform_fast(b);
    ASSERT_EQ(d.size(), static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; r += 1 + n / 50) {
      auto o = oracle::coefficient(v, r, n);
      EXPECT_LE(std::abs(d[r] - o) / static_cast<double>(v.size()), 1e-9);
      EXPECT_LE(std::abs(f[r] - o) / static_cast<double>(v.size()), 1e-9);
    }
  }
}

TEST(Spectrum, TorsionCharacters) {
  auto g = GroupSpec::torsion(2, 3);
  // a subgroup: its transform is |H| on the annihilator and 0 elsewhere
  GSet h(g, {0, 1, 2, 3});  // {(0,0,0),(0,0,1),(0,1,0),(0,1,1)}
  auto s = spectrum(h);
  EXPECT_NEAR(s.magnitudes[4], 4.0, 1e-12);  // character (1,0,0)
  EXPECT_NEAR(s.magnitudes[1], 0.0, 1e-12);
  EXPECT_EQ(s.max_index, 4);
  EXPECT_LE(s.parseval_residual, kSpectralTolerance);
}

TEST(Spectrum, WindowRejected) { EXPECT_THROW(spectrum(win({0, 1})), GroupMismatch); }

TEST(Spectrum, TopIsSortedAndSkipsPrincipal) {
  auto s = spectrum(cyc(101, {0, 1, 3}));
  auto top = s.top(4);
  ASSERT_EQ(top.size(), 4u);
  EXPECT_EQ(top[0].first, s.max_index);
  for (std::size_t i = 0; i < top.size(); ++i) {
    EXPECT_NE(top[i].first, 0);
    if (i) {
      EXPECT_GE(top[i - 1].second, top[i].second);
    }
  }
}

TEST(Convolution, Examples) {
  auto c0 = convolution_counts(cyc(7, {0}), 4);
  ASSERT_EQ(c0.counts.size(), 1u);
  EXPECT_EQ(c0.counts[0].first, 0);
  EXPECT_EQ(c0.counts[0].second, 1);

  auto c1 = convolution_counts(cyc(101, {0, 1}), 1);
  ASSERT_EQ(c1.counts.size(), 3u);
  EXPECT_EQ(c1.counts[0].second, 1);
  EXPECT_EQ(c1.counts[1].second, 2);
  EXPECT_EQ(c1.counts[2].second, 1);

  auto c2 = convolution_counts(cyc(101, {0, 1, 3}), 1);
  std::vector<std::pair<Code, BigInt>> expect{{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 2}, {6, 1}};
  EXPECT_EQ(c2.counts, expect);
  EXPECT_EQ(c2.total(), 9);
}

TEST(Convolution, MatchesTupleEnumeration) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t n = 5 + static_cast<std::int64_t>(rng() % 60);
    auto v = oracle::random_subset(rng, n, 1 + rng() % 6);
    int m = 1 + static_cast<int>(rng() % 3);
    auto c = convolution_counts(cyc(n, v), m);
    auto o = oracle::convolution_brute(v, m, n);
    ASSERT_EQ(c.counts.size(), o.size());
    for (const auto& [x, r] : c.counts) EXPECT_EQ(r, o[x]);
    EXPECT_EQ(c.support(), iterated_sum(cyc(n, v), m + 1));
    EXPECT_EQ(c.total(), int_pow(BigInt(v.size()), m + 1));
  }
}

TEST(Moment, Examples) {
  auto r = moment_lower_bound_check(cyc(7, {0}), 1);
  EXPECT_EQ(r.support_size, 1u);
  EXPECT_NEAR(r.max_nonprincipal, 1.0, 1e-12);
  EXPECT_NEAR(r.max_bound, 6.0 / 7.0, 1e-12);
  EXPECT_TRUE(r.holds());

  auto whole = moment_lower_bound_check(GSet::whole(GroupSpec::cyclic(11)), 1);
  EXPECT_LE(whole.max_bound, 1e-9);
  EXPECT_TRUE(whole.holds());

  auto r3 = moment_lower_bound_check(cyc(101, {0, 1, 3}), 2);
  EXPECT_TRUE(r3.total_exact);
  EXPECT_TRUE(r3.cauchy_schwarz_holds);
  EXPECT_GE(r3.cauchy_schwarz_margin, 1.0);
  EXPECT_TRUE(r3.holds());
}

TEST(EtaLargecoeff, Examples) {
  Rational beta = Rational(1) / int_pow(BigInt(14), 3);
  auto p = eta_largecoeff(beta, 2);
  EXPECT_EQ(p.m, 5);
  double expected = 18.0 * std::pow(14.0, -1.5) * std::log(2744.0) / 2.0;
  EXPECT_LE(rel(p.eta, expected), 1e-12);
  EXPECT_TRUE(p.m_at_least_k);
  EXPECT_TRUE(p.m_lower_bound);
  EXPECT_TRUE(p.chain_holds);

  EXPECT_THROW(eta_largecoeff(make_rational(1, 196), 2), DomainError);

  auto p3 = eta_largecoeff(make_rational(1, 1000000), 3);
  EXPECT_GE(p3.m, 3);
  EXPECT_LT(p3.eta, 1.0);
  EXPECT_TRUE(p3.chain_holds);
}

TEST(EtaLargecoeff2, Examples) {
  double e = eta_largecoeff2(make_rational(1, 196), make_rational(1), 1);
  EXPECT_LE(rel(e, 9.0 / 14.0 * std::log(196.0)), 1e-12);

  double e2 = eta_largecoeff2(make_rational(1, 1000000), make_rational(1), 1);
  EXPECT_LE(rel(e2, 9e-3 * 6.0 * std::log(10.0)), 1e-12);

  EXPECT_THROW(eta_largecoeff2(make_rational(1, 195), make_rational(1), 1), DomainError);
  EXPECT_THROW(eta_largecoeff2(make_rational(1, 1000000), make_rational(10), 1), DomainError);
  // k_cover above 2K^2 - 1
  EXPECT_THROW(eta_largecoeff2(make_rational(1, 1000000), make_rational(1), 2), DomainError);
}

TEST(LargeCoefficient, Singleton) {
  auto b = cyc(1000003, {0});
  auto c = certified_large_coefficient(b, b);
  EXPECT_NEAR(c.magnitude, 1.0, 1e-12);
  EXPECT_TRUE(c.holds);
}

TEST(LargeCoefficient, Interval) {
  // N near 14^4 * 10, prime
  const std::int64_t n = 384173;
  auto b = GSet::progression(GroupSpec::cyclic(n), 0, 1, 10);
  auto t = find_covering_translates(b, 2);
  ASSERT_TRUE(t.has_value());
  auto c = certified_large_coefficient(b, *t);
  EXPECT_EQ(c.k, 2);
  EXPECT_TRUE(c.holds);
  EXPECT_GE(c.magnitude, c.target);
}

TEST(LargeCoefficient, RejectsDenseSets) {
  auto b = GSet::progression(GroupSpec::cyclic(101), 0, 1, 10);
  auto t = find_covering_translates(b, 2);
  ASSERT_TRUE(t.has_value());
  EXPECT_THROW(certified_large_coefficient(b, *t), DomainError);
}
