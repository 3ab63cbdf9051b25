#include "addcomb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "addcomb/errors.hpp"
#include "addcomb/instance_io.hpp"

namespace addcomb {

namespace {

CheckOutcome pass() { return {CheckStatus::kPass, Json()}; }
CheckOutcome skip() { return {CheckStatus::kSkip, Json()}; }
CheckOutcome fail(Json detail) { return {CheckStatus::kFail, std::move(detail)}; }

bool prime_cyclic(const GSet& a) {
  return a.group().is_cyclic() && is_prime(static_cast<std::uint64_t>(a.group().modulus()));
}

CoveringCertificate inc_certificate(const GSet& a, const SuiteConfig& cfg) {
  return covering_certificate(a, a, a, a.size() <= cfg.witness_budget, cfg.witness_budget);
}

CheckOutcome check_inc(const Instance& inst, const SuiteConfig& cfg) {
  try {
    const CoveringCertificate c = inc_certificate(inst.set, cfg);
    if (!c.verified()) return fail(to_json(c));
    if (c.bound_kind == CoveringBoundKind::kPluennecke &&
        Rational(BigInt(c.translates.size())) > 2 * c.k1 * c.k2 - 1) {
      return fail(to_json(c));
    }
    return pass();
  } catch (const VerificationError& e) {
    return fail(Json{{"error", e.what()}});
  }
}

CheckOutcome check_incm(const Instance& inst, const SuiteConfig& cfg) {
  const CoveringCertificate c = inc_certificate(inst.set, cfg);
  const int m = verify_incm(inst.set, c.translates, cfg.incm_m);
  if (m < cfg.incm_m) {
    return fail(Json{{"translates", elements_to_json(c.translates)}, {"first_failing_m", m + 1}});
  }
  return pass();
}

// Covered pair (B, T) = (A - A, T): the covering inclusion makes A - A a
// |T|-covering set.
CheckOutcome check_growth(const Instance& inst, const SuiteConfig& cfg, bool exponential) {
  const CoveringCertificate c = inc_certificate(inst.set, cfg);
  const GSet b = difference_set(inst.set, inst.set);
  const int m_max = std::max<int>(4, static_cast<int>(c.translates.size()));
  for (int m = 1; m <= m_max; ++m) {
    const GrowthBoundReport r = growth_bound_check(b, c.translates, m);
    const bool ok = exponential ? r.estecov_holds : (r.span_within_j && r.estjcov_holds);
    if (!ok) return fail(to_json(r));
  }
  return pass();
}

CheckOutcome check_parseval(const Instance& inst, const SuiteConfig&) {
  if (!inst.set.group().finite()) return skip();
  const SpectrumReport s = spectrum(inst.set, SpectrumMethod::kDirect);
  if (!(s.parseval_residual <= kSpectralTolerance)) return fail(to_json(s));
  if (inst.set.group().order() <= (std::int64_t{1} << 16)) {
    const auto direct = transform_direct(inst.set);
    const auto fast = transform_fast(inst.set);
    const double scale = std::max<double>(1.0, static_cast<double>(inst.set.size()));
    for (std::size_t i = 0; i < direct.size(); ++i) {
      if (std::abs(direct[i] - fast[i]) > kSpectralTolerance * scale) {
        return fail(Json{{"index", i}, {"difference", json_number(std::abs(direct[i] - fast[i]))}});
      }
    }
  }
  return pass();
}

CheckOutcome check_moment(const Instance& inst, const SuiteConfig& cfg) {
  if (!inst.set.group().finite()) return skip();
  for (int m = 1; m <= cfg.moment_m; ++m) {
    const MomentReport r = moment_lower_bound_check(inst.set, m);
    if (!r.holds()) return fail(to_json(r));
  }
  return pass();
}

// For each l < N/3 the conclusion interval does not depend on b, so it is
// enough to try the b with the fewest exceptions.
CheckOutcome check_cover(const Instance& inst, const SuiteConfig&) {
  const GSet& a = inst.set;
  if (!a.group().is_cyclic()) return skip();
  const std::int64_t n = a.group().modulus();
  const GSet d = difference_set(a, a);
  std::vector<std::uint8_t> mark(static_cast<std::size_t>(n), 0);
  for (const Code x : d) mark[static_cast<std::size_t>(x)] = 1;
  for (std::int64_t l = 0; 3 * l < n; ++l) {
    std::int64_t best_in = -1;
    Code best_b = 0;
    for (Code b = 0; b < n; ++b) {
      std::int64_t in = 0;
      for (std::int64_t j = 0; j <= l; ++j) in += mark[static_cast<std::size_t>((b + j) % n)];
      if (in > best_in) {
        best_in = in;
        best_b = b;
      }
    }
    const GapCoverResult r = gap_cover(a, best_b, l);
    if (r.hypothesis_holds && !r.conclusion_holds) {
      Json detail = to_json(r);
      detail["b"] = best_b;
      detail["l"] = l;
      return fail(std::move(detail));
    }
  }
  return pass();
}

CheckOutcome check_lev(const Instance& inst, const SuiteConfig& cfg) {
  const GSet& b = inst.set;
  if (!b.group().is_cyclic() || b.group().modulus() < 2) return skip();
  for (const Rational& eps : cfg.epsilons) {
    for (const Rational& delta : cfg.deltas) {
      if (delta * 2 >= 1) continue;
      const LevResult r = lev_interval(b, eps, delta);
      if (r.applicable && !r.conclusion_holds) {
        Json detail = to_json(r);
        detail["eps"] = json_rational(eps);
        detail["delta"] = json_rational(delta);
        return fail(std::move(detail));
      }
    }
  }
  return pass();
}

CheckOutcome check_diam(const Instance& inst, const SuiteConfig& cfg) {
  const GSet& a = inst.set;
  if (!prime_cyclic(a)) return skip();
  const DiameterWitness w = diameter(a);
  if (!w.contained) return fail(to_json(w));
  for (const Rational& delta : cfg.deltas) {
    if (delta * 3 >= 1) continue;
    const DiamSpectrumReport r = diam_from_spectrum(a, delta);
    if (r.hypothesis_met && !r.conclusion_holds) {
      Json detail = to_json(r);
      detail["delta"] = json_rational(delta);
      return fail(std::move(detail));
    }
  }
  return pass();
}

CheckOutcome check_iso(const Instance& inst, const SuiteConfig& cfg) {
  const GSet& a = inst.set;
  if (!prime_cyclic(a)) return skip();
  const std::int64_t n = a.group().modulus();
  for (int k = 2; k <= cfg.iso_k; ++k) {
    try {
      const RectifyResult r = rectify(a, k);
      const bool ok = r.success ? (r.witness->verified || r.witness->certification_skipped)
                                : static_cast<Int128>(k) * r.diameter.length >= n;
      if (!ok) return fail(to_json(r));
    } catch (const VerificationError& e) {
      return fail(Json{{"k", k}, {"error", e.what()}});
    }
  }
  return pass();
}

CheckOutcome check_torsion(const Instance& inst, const SuiteConfig& cfg) {
  if (!inst.set.group().is_torsion()) return skip();
  try {
    const SubgroupCosetCertificate c = torsion_cover(inst.set, cfg.witness_budget);
    if (!c.verified()) return fail(to_json(c));
    return pass();
  } catch (const VerificationError& e) {
    return fail(Json{{"error", e.what()}});
  }
}

// Instance-independent: DP against tuple enumeration, and the bound.
CheckOutcome check_jbound(const SuiteConfig& cfg) {
  for (int k = 1; k <= cfg.jbound_k; ++k) {
    for (int m = 0; m <= cfg.jbound_m; ++m) {
      BigInt brute = 0;
      std::vector<int> x(static_cast<std::size_t>(k), -m);
      while (true) {
        int pos = 0;
        int neg = 0;
        for (const int v : x) (v > 0 ? pos : neg) += std::abs(v);
        if (pos == neg && pos <= m) ++brute;
        std::size_t i = 0;
        while (i < x.size() && x[i] == m) x[i++] = -m;
        if (i == x.size()) break;
        ++x[i];
      }
      const BigInt dp = j_count(k, m);
      if (dp != brute) return fail(Json{{"k", k}, {"m", m}, {"dp", json_bigint(dp)}, {"brute", json_bigint(brute)}});
      if (m >= k && !j_bound_report(k, m).holds) return fail(to_json(j_bound_report(k, m)));
    }
  }
  return pass();
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"inc", check_inc},
      {"incm", check_incm},
      {"jbound", nullptr},
      {"estjcov", [](const Instance& i, const SuiteConfig& c) { return check_growth(i, c, false); }},
      {"estecov", [](const Instance& i, const SuiteConfig& c) { return check_growth(i, c, true); }},
      {"parseval", check_parseval},
      {"moment", check_moment},
      {"cover", check_cover},
      {"lev", check_lev},
      {"diam", check_diam},
      {"iso", check_iso},
      {"torsion", check_torsion},
  };
  return checks;
}

}  // namespace

std::vector<std::string> registered_checks() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto started = std::chrono::steady_clock::now();

  // Resolve names, keeping registry order for built-ins and then extras.
  std::vector<std::pair<std::string, CheckFn>> selected;
  std::set<std::string> wanted;
  for (const std::string& name : config.checks) {
    if (name == "all") {
      for (const auto& [n, fn] : registry()) wanted.insert(n);
      continue;
    }
    const bool known = config.extra_checks.count(name) > 0 ||
                       std::any_of(registry().begin(), registry().end(), [&](const auto& p) { return p.first == name; });
    if (!known) throw DomainError("unknown check '" + name + "'");
    wanted.insert(name);
  }
  for (const auto& [name, fn] : registry()) {
    if (wanted.count(name) && !config.extra_checks.count(name)) selected.emplace_back(name, fn);
  }
  for (const auto& [name, fn] : config.extra_checks) {
    if (wanted.count(name)) selected.emplace_back(name, fn);
  }

  SuiteReport report;
  report.id = config.id;
  report.seed = config.generator.seed;

  const bool needs_instances = std::any_of(selected.begin(), selected.end(), [](const auto& p) { return p.second != nullptr; });
  std::vector<Instance> instances;
  if (needs_instances) instances = enumerate_instances(config.generator);
  std::sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) { return a.id < b.id; });
  report.instance_count = instances.size();

  for (const auto& [name, fn] : selected) {
    CheckTally tally;
    tally.name = name;
    auto record = [&](const std::string& id, CheckOutcome outcome) {
      switch (outcome.status) {
        case CheckStatus::kPass:
          ++tally.passed;
          break;
        case CheckStatus::kSkip:
          ++tally.skipped;
          break;
        case CheckStatus::kFail:
          ++tally.failed;
          report.counterexamples.push_back({name, id, std::move(outcome.detail)});
          break;
      }
    };
    if (!fn) {
      record("global", check_jbound(config));
    } else {
      for (const Instance& inst : instances) {
        CheckOutcome outcome = fn(inst, config);
        if (outcome.status == CheckStatus::kFail && outcome.detail.is_object()) {
          outcome.detail["set"] = instance_to_json(inst.set);
        }
        record(inst.id, std::move(outcome));
      }
    }
    report.tallies.push_back(std::move(tally));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Json to_json(const SuiteReport& r) {
  Json tallies = Json::array();
  for (const CheckTally& t : r.tallies) {
    tallies.push_back(Json{{"check", t.name}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}});
  }
  Json counterexamples = Json::array();
  for (const Counterexample& c : r.counterexamples) {
    counterexamples.push_back(Json{{"check", c.check}, {"instance", c.instance}, {"payload", c.payload}});
  }
  return Json{{"suite", r.id},
              {"seed", r.seed},
              {"instance_count", r.instance_count},
              {"tallies", std::move(tallies)},
              {"counterexamples", std::move(counterexamples)},
              {"passed", r.counterexamples.empty()}};
}

}  // namespace addcomb
