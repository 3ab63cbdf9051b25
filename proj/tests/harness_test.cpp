#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "addcomb/bounds.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/instances.hpp"
#include "addcomb/pipeline.hpp"
#include "addcomb/report.hpp"
#include "addcomb/suite.hpp"
#include "support/helpers.hpp"

using namespace addcomb;
using testing_support::cyc;
using testing_support::vec;

namespace {

Rational pow_inv(std::int64_t base, unsigned e) { return Rational(1) / int_pow(BigInt(base), e); }

}  // namespace

TEST(Bounds, KOneAtThreshold) {
  auto r = bound_calculator(pow_inv(16, 12), make_rational(1), 2);
  EXPECT_TRUE(r.gates_exact);
  EXPECT_TRUE(r.alpha_within_thm1);
  EXPECT_FALSE(r.alpha_within_thm2);
  EXPECT_TRUE(r.tau_gate);
  EXPECT_NEAR(r.log_threshold_thm1, -12.0L * std::log(16.0L), 1e-12L);
  double tau = std::pow(16.0, -12.0);
  double eta = 9.0 * std::sqrt(tau) * std::log(1.0 / tau);
  EXPECT_NEAR(r.eta / eta, 1.0, 1e-9);
  EXPECT_NEAR(r.delta / (2.0 * std::sqrt(eta)), 1.0, 1e-9);
  EXPECT_TRUE(r.delta_below_third);
  EXPECT_TRUE(r.thm1_chain_holds());

  auto r2 = bound_calculator(pow_inv(32, 12), make_rational(1), 2);
  EXPECT_TRUE(r2.alpha_within_thm2);
  EXPECT_TRUE(r2.delta_below_inverse_k);
  EXPECT_TRUE(r2.thm2_chain_holds());
}

TEST(Bounds, VacuousForLargeAlpha) {
  auto r = bound_calculator_log(-1.0L, make_rational(1), 2);
  EXPECT_NEAR(r.delta_bound, 12.0 * std::exp(-0.25), 1e-9);
  EXPECT_FALSE(r.delta_bound_below_third);
  EXPECT_FALSE(r.delta_bound_below_inverse_k);
  EXPECT_FALSE(r.alpha_within_thm1);
  EXPECT_FALSE(r.alpha_within_thm2);
}

TEST(Bounds, ClosedBoundary) {
  auto t = threshold_thm1(make_rational(3, 2));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, pow_inv(24, 27));
  EXPECT_TRUE(bound_calculator(*t, make_rational(3, 2), 2).alpha_within_thm1);
  Rational above = *t * make_rational(1000001, 1000000);
  EXPECT_FALSE(bound_calculator(above, make_rational(3, 2), 2).alpha_within_thm1);
}

TEST(Bounds, Monotone) {
  for (auto k_val : {make_rational(1), make_rational(3, 2), make_rational(2), make_rational(3)}) {
    // decreasing once log(1/alpha) >= 2K^2
    double prev = std::numeric_limits<double>::infinity();
    const long double start = -2.0L * static_cast<long double>(static_cast<double>(k_val * k_val)) - 0.5L;
    for (long double la = start; la > -2000.0L; la *= 1.7L) {
      auto r = bound_calculator_log(la, k_val, 2);
      EXPECT_LT(r.delta_bound, prev);
      prev = r.delta_bound;
    }
    for (int k = 2; k <= 6; ++k) {
      auto r = bound_calculator_log(-5.0L, k_val, k);
      EXPECT_LE(r.log_threshold_thm2, r.log_threshold_thm1);
    }
  }
}

TEST(Bounds, DomainChecks) {
  EXPECT_THROW(bound_calculator(make_rational(1), make_rational(1), 2), DomainError);
  EXPECT_THROW(bound_calculator(make_rational(1, 2), make_rational(1, 2), 2), DomainError);
  EXPECT_THROW(bound_calculator(make_rational(1, 2), make_rational(1), 1), DomainError);
}

TEST(Pipeline, ShortInterval) {
  auto a = GSet::progression(GroupSpec::cyclic(10007), 0, 1, 5);
  auto r = theorem1_pipeline(a);
  EXPECT_EQ(r.doubling, make_rational(9, 5));
  EXPECT_EQ(r.alpha, make_rational(5, 10007));
  EXPECT_EQ(r.tau, make_rational(9, 10007));
  EXPECT_EQ(r.true_diameter, 4);
  EXPECT_FALSE(r.gates_passed());
  EXPECT_FALSE(r.violation());
}

TEST(Pipeline, WholeGroup) {
  auto r = theorem1_pipeline(GSet::whole(GroupSpec::cyclic(13)));
  EXPECT_EQ(r.doubling, make_rational(1));
  EXPECT_EQ(r.alpha, make_rational(1));
  EXPECT_FALSE(r.bounds.has_value());
  EXPECT_FALSE(r.alpha_gate);
  EXPECT_FALSE(r.tau_gate);
  EXPECT_EQ(r.true_diameter, 12);
  EXPECT_FALSE(r.violation());
}

TEST(Pipeline, RandomSweepHasNoViolation) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kRandom;
  spec.group = GroupSpec::cyclic(101);
  spec.size = 8;
  spec.count = 200;
  spec.seed = 99;
  for (const auto& inst : enumerate_instances(spec)) EXPECT_FALSE(theorem1_pipeline(inst.set).violation());
  EXPECT_THROW(theorem1_pipeline(cyc(100, {1})), DomainError);
}

TEST(Instances, ExhaustiveCount) {
  GeneratorSpec spec;
  spec.group = GroupSpec::cyclic(11);
  spec.max_size = 3;
  auto v = enumerate_instances(spec);
  EXPECT_EQ(v.size(), 231u);
  EXPECT_EQ(v.front().id, "exh-000000");
  EXPECT_EQ(v.back().id, "exh-000230");
  spec.budget = 100;
  EXPECT_THROW(enumerate_instances(spec), BudgetExceeded);
}

TEST(Instances, RandomIsDeterministic) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kRandom;
  spec.group = GroupSpec::cyclic(101);
  spec.size = 8;
  spec.count = 100;
  spec.seed = 7;
  auto a = enumerate_instances(spec);
  auto b = enumerate_instances(spec);
  ASSERT_EQ(a.size(), 100u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].set, b[i].set);
    EXPECT_EQ(a[i].set.size(), 8u);
  }
  spec.seed = 8;
  EXPECT_NE(enumerate_instances(spec)[0].set, a[0].set);
}

TEST(Instances, StructuredProgressions) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kStructured;
  spec.group = GroupSpec::cyclic(101);
  spec.lengths = {5};
  auto v = enumerate_instances(spec);
  ASSERT_EQ(v.size(), 5u);
  for (const auto& inst : v) {
    if (inst.family != "progression") continue;
    EXPECT_EQ(inst.set.size(), 5u);
    EXPECT_EQ(doubling_ratio(inst.set).sum, make_rational(9, 5));
  }
  spec.group = GroupSpec::torsion(2, 3);
  auto t = enumerate_instances(spec);
  EXPECT_EQ(t.size(), 7u);
  for (const auto& inst : t) EXPECT_EQ(doubling_ratio(inst.set).sum, make_rational(1));
}

TEST(Instances, NormalizedSweepKeepsOneSetPerOrbit) {
  GeneratorSpec spec;
  spec.group = GroupSpec::cyclic(7);
  spec.max_size = 7;
  spec.normalize = true;
  auto v = enumerate_instances(spec);
  for (const auto& inst : v) EXPECT_EQ(affine_normal_form(inst.set), inst.set);
  // orbits of nonempty subsets of Z/7 under the affine group: sizes 1,2 -> 1 each,
  // 3 -> 2, 4 -> 2, 5 -> 1, 6 -> 1, 7 -> 1
  EXPECT_EQ(v.size(), 9u);
}

TEST(AffineNormalForm, Invariant) {
  auto a = cyc(13, {2, 5, 6});
  auto f = affine_normal_form(a);
  EXPECT_EQ(f.min(), 0);
  for (std::int64_t lambda = 1; lambda < 13; ++lambda)
    EXPECT_EQ(affine_normal_form(translate(dilate(a, lambda), 4)), f);
}

TEST(Suite, ExhaustiveThirteenPasses) {
  SuiteConfig config;
  config.generator.group = GroupSpec::cyclic(13);
  config.generator.max_size = 4;
  auto r = run_suite(config);
  EXPECT_EQ(r.instance_count, 1092u);
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& t : r.tallies) EXPECT_EQ(t.failed, 0u) << t.name;
}

TEST(Suite, JBoundOnly) {
  SuiteConfig config;
  config.checks = {"jbound"};
  config.generator.group = GroupSpec::cyclic(5);
  config.generator.max_size = 1;
  auto r = run_suite(config);
  ASSERT_EQ(r.tallies.size(), 1u);
  EXPECT_EQ(r.tallies[0].name, "jbound");
  EXPECT_EQ(r.tallies[0].failed, 0u);
  EXPECT_GT(r.tallies[0].passed, 0u);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Suite, CorruptedCheckGivesNonzeroExit) {
  SuiteConfig config;
  config.checks = {"inc", "broken"};
  config.generator.group = GroupSpec::cyclic(7);
  config.generator.max_size = 2;
  config.extra_checks["broken"] = [](const Instance& inst, const SuiteConfig&) {
    CheckOutcome out;
    out.status = inst.set.size() == 2 ? CheckStatus::kFail : CheckStatus::kPass;
    out.detail = Json{{"reason", "fixture"}};
    return out;
  };
  auto r = run_suite(config);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.counterexamples.size(), 21u);
  EXPECT_EQ(r.counterexamples.front().check, "broken");
  EXPECT_FALSE(to_json(r)["passed"].get<bool>());
}

TEST(Suite, UnknownCheckRejected) {
  SuiteConfig config;
  config.checks = {"nope"};
  EXPECT_THROW(run_suite(config), DomainError);
}

TEST(Suite, ReportIsByteIdentical) {
  SuiteConfig config;
  config.generator.kind = GeneratorKind::kRandom;
  config.generator.group = GroupSpec::cyclic(61);
  config.generator.size = 5;
  config.generator.count = 40;
  config.generator.seed = 1234;
  auto a = to_json(run_suite(config)).dump(2);
  auto b = to_json(run_suite(config)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}

TEST(Report, NumbersAndHuman) {
  EXPECT_EQ(json_number(1.0 / 3.0).dump(), "0.333333333333");
  EXPECT_EQ(json_rational(make_rational(-7, 4)).get<std::string>(), "-7/4");
  EXPECT_EQ(json_bigint(int_pow(BigInt(10), 30)).get<std::string>(), "1000000000000000000000000000000");
  EXPECT_EQ(json_bigint(BigInt(42)).get<std::int64_t>(), 42);
  Json doc{{"a", 1}, {"b", Json{{"c", "x"}}}};
  EXPECT_EQ(to_human(doc), "a: 1\nb.c: x\n");
}

TEST(Report, WitnessCarriesReplayFields) {
  auto r = rectify(cyc(23, {0, 5, 10}), 3);
  auto j = to_json(r);
  auto text = j.dump();
  for (const char* key : {"\"dilation\"", "\"shift\"", "\"length\"", "\"image\"", "\"modulus\"", "\"k\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}
