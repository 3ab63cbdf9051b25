#include "addcomb/torsion.hpp"

#include <algorithm>
#include <deque>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

// floor(2K^2 - 2), clamped at 0.
unsigned torsion_exponent(const Rational& k) {
  const BigInt e = floor_rational(2 * k * k - 2);
  return e < 0 ? 0u : static_cast<unsigned>(e);
}

Rational theorem_bound(const Rational& lead, std::int64_t r, const Rational& k, std::size_t n) {
  return lead * Rational(int_pow(BigInt(r), torsion_exponent(k))) * Rational(BigInt(n));
}

}  // namespace

GSet subgroup_generated(const GSet& x, std::size_t budget) {
  const GroupSpec& g = x.group();
  if (!g.finite()) throw GroupMismatch("subgroup_generated needs a finite group");
  Indicator seen(0, g.order() - 1);
  std::vector<Code> out{0};
  seen.insert(0);
  std::deque<Code> queue{0};
  while (!queue.empty()) {
    const Code h = queue.front();
    queue.pop_front();
    for (const Code gen : x) {
      const Code y = g.add(h, gen);
      if (seen.insert(y)) {
        if (out.size() >= budget) {
          throw BudgetExceeded("subgroup closure exceeds budget " + std::to_string(budget));
        }
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  // Closure under + suffices: elements of a finite group have finite order.
  std::sort(out.begin(), out.end());
  return GSet::from_canonical(g, std::move(out));
}

SubgroupCosetCertificate torsion_cover(const GSet& a, std::size_t witness_budget) {
  const GroupSpec& g = a.group();
  if (!g.is_torsion()) throw GroupMismatch("torsion_cover needs a group (Z/r)^n");
  if (a.empty()) throw DomainError("torsion_cover needs a nonempty set");

  SubgroupCosetCertificate c;
  c.set = a;
  c.exponent = g.exponent();
  const std::size_t n = a.size();
  const GSet diff = difference_set(a, a);
  c.difference_size = diff.size();
  c.k_sum = make_rational(static_cast<std::int64_t>(sumset(a, a).size()), static_cast<std::int64_t>(n));
  c.k_difference = make_rational(static_cast<std::int64_t>(diff.size()), static_cast<std::int64_t>(n));

  const bool use_witness = n <= witness_budget;
  const CoveringCertificate from_sum = covering_certificate(a, a, a, use_witness, witness_budget);
  const GSet neg = negate(a);
  const CoveringCertificate from_diff = covering_certificate(a, neg, neg, use_witness, witness_budget);
  const bool take_diff = from_diff.translates.size() < from_sum.translates.size();
  const CoveringCertificate& cov = take_diff ? from_diff : from_sum;
  c.translates = cov.translates;
  c.source = take_diff ? TranslateSource::kDifference : TranslateSource::kSum;
  c.translates_bound = cov.bound_kind;

  for (std::size_t i = 1; i < c.translates.size(); ++i) {
    c.generators.push_back(g.subtract(c.translates[i], c.translates[0]));
  }
  const GSet span = subgroup_generated(GSet(g, c.generators));
  c.translate_span_size = span.size();

  c.subgroup = subgroup_generated(diff);
  c.subgroup_size = c.subgroup.size();
  c.coset_rep = a.min();

  c.subgroup_closed = c.subgroup.contains(0) &&
                      std::all_of(c.subgroup.begin(), c.subgroup.end(), [&](Code h) {
                        return c.subgroup.contains(g.negate(h)) &&
                               std::all_of(diff.begin(), diff.end(),
                                           [&](Code d) { return c.subgroup.contains(g.add(h, d)); });
                      });
  c.contains_a = std::all_of(a.begin(), a.end(),
                             [&](Code x) { return c.subgroup.contains(g.subtract(x, c.coset_rep)); });
  c.gen_inclusion = c.subgroup.is_subset_of(sumset(diff, span));

  const unsigned t_minus_one = static_cast<unsigned>(c.translates.size() - 1);
  const BigInt r_pow = int_pow(BigInt(c.exponent), t_minus_one);
  c.span_bound_holds = BigInt(c.translate_span_size) <= r_pow;
  c.bound_b_translates = BigInt(c.difference_size) * r_pow;
  c.difference_bound_holds = BigInt(c.subgroup_size) <= c.bound_b_translates;
  c.ruzsa_holds = Rational(BigInt(c.difference_size)) <= c.k_sum * c.k_sum * Rational(BigInt(n));

  c.bound_a = theorem_bound(c.k_sum * c.k_sum, c.exponent, c.k_sum, n);
  c.bound_b = theorem_bound(c.k_difference, c.exponent, c.k_difference, n);
  const Rational order(BigInt(g.order()));
  c.bound_a_capped = std::min(c.bound_a, order);
  c.bound_b_capped = std::min(c.bound_b, order);
  const Rational size(BigInt(c.subgroup_size));
  c.bound_a_holds = size <= c.bound_a;
  c.bound_b_holds = size <= c.bound_b;
  return c;
}

}  // namespace addcomb
