#include "addcomb/covering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "addcomb/errors.hpp"
#include "addcomb/growth.hpp"

namespace addcomb {

namespace {

Indicator sum_indicator(const GSet& a, const GSet& b) {
  if (a.group().finite()) return Indicator(0, a.group().order() - 1);
  return Indicator(a.group().add(a.min(), b.min()), a.group().add(a.max(), b.max()));
}

std::size_t uncovered(const GSet& base, Code u, const Indicator& covered) {
  const GroupSpec& g = base.group();
  std::size_t fresh = 0;
  for (const Code a : base) fresh += covered.test(g.add(a, u)) ? 0 : 1;
  return fresh;
}

Rational ratio_of(std::size_t num, std::size_t den) {
  return make_rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

GSet greedy_translates(const GSet& base, const GSet& candidates) {
  base.group().require_compatible(candidates.group());
  if (base.empty() || candidates.empty()) throw DomainError("greedy_translates needs nonempty inputs");
  const GroupSpec& g = base.group();
  Indicator covered = sum_indicator(base, candidates);
  std::vector<bool> taken(candidates.size(), false);
  std::vector<Code> chosen;
  const std::size_t n = base.size();

  while (true) {
    std::size_t best_gain = 0;
    std::size_t best_idx = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (taken[i]) continue;
      const std::size_t gain = uncovered(base, candidates[i], covered);
      if (2 * gain >= n && (best_idx == candidates.size() || gain > best_gain)) {
        best_gain = gain;
        best_idx = i;
      }
    }
    if (best_idx == candidates.size()) break;
    taken[best_idx] = true;
    chosen.push_back(candidates[best_idx]);
    for (const Code a : base) covered.insert(g.add(a, candidates[best_idx]));
  }
  std::sort(chosen.begin(), chosen.end());
  return GSet::from_canonical(candidates.group(), std::move(chosen));
}

bool greedy_maximality_holds(const GSet& base, const GSet& candidates, const GSet& translates) {
  const GroupSpec& g = base.group();
  Indicator covered = sum_indicator(base, candidates);
  for (const Code t : translates) {
    for (const Code a : base) covered.insert(g.add(a, t));
  }
  return std::all_of(candidates.begin(), candidates.end(),
                     [&](Code u) { return 2 * uncovered(base, u, covered) < base.size(); });
}

PluenneckeWitness pluennecke_witness(const GSet& a, const GSet& b1, const GSet& b2, std::size_t budget) {
  a.group().require_compatible(b1.group());
  a.group().require_compatible(b2.group());
  if (a.empty() || b1.empty() || b2.empty()) throw DomainError("pluennecke_witness needs nonempty sets");
  if (a.size() > budget || a.size() > 62) {
    throw BudgetExceeded("Pluennecke witness search over |A| = " + std::to_string(a.size()) +
                         " exceeds budget " + std::to_string(budget) + "; fall back to A' = A");
  }
  const GSet s = sumset(b1, b2);
  const GSet span = sumset(a, s);  // A' + S lives inside A + S
  const std::size_t n = a.size();
  const std::size_t words = (span.size() + 63) / 64;

  // rows[i]: bitmap over the elements of A + S hit by a_i + S.
  std::vector<std::uint64_t> rows(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Code x : s) {
      const Code y = a.group().add(a[i], x);
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(span.begin(), span.end(), y) - span.begin());
      rows[i * words + pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }

  PluenneckeWitness w;
  std::size_t best_count = 0;
  std::size_t best_size = 0;
  std::vector<std::size_t> best_pick;
  std::vector<std::uint64_t> acc(words);
  std::vector<std::size_t> pick;

  for (std::size_t size = n; size >= 1; --size) {
    // No subset of this size (or smaller) can beat |S|/size.
    if (best_size != 0 && s.size() * best_size >= best_count * size) break;
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      ++w.subsets_examined;
      std::fill(acc.begin(), acc.end(), 0);
      for (const std::size_t i : pick) {
        for (std::size_t wd = 0; wd < words; ++wd) acc[wd] |= rows[i * words + wd];
      }
      std::size_t count = 0;
      for (const std::uint64_t wd : acc) count += static_cast<std::size_t>(std::popcount(wd));
      if (best_size == 0 || count * best_size < best_count * size) {
        best_count = count;
        best_size = size;
        best_pick = pick;
      }
      // Next combination in lexicographic order.
      std::size_t j = size;
      while (j > 0 && pick[j - 1] == n - size + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  std::vector<Code> chosen;
  for (const std::size_t i : best_pick) chosen.push_back(a[i]);
  w.subset = GSet::from_canonical(a.group(), std::move(chosen));
  w.sumset_size = best_count;
  w.ratio = ratio_of(best_count, best_size);
  w.k1 = ratio_of(sumset(a, b1).size(), n);
  w.k2 = ratio_of(sumset(a, b2).size(), n);
  w.within_bound = w.ratio <= w.k1 * w.k2;
  return w;
}

CoveringCertificate covering_certificate(const GSet& a, const GSet& b1, const GSet& b2, bool use_witness,
                                         std::size_t witness_budget) {
  a.group().require_compatible(b1.group());
  a.group().require_compatible(b2.group());
  if (a.empty() || b1.empty() || b2.empty()) throw DomainError("covering_certificate needs nonempty sets");

  CoveringCertificate c;
  c.base = a;
  c.b1 = b1;
  c.b2 = b2;
  c.k1 = ratio_of(sumset(a, b1).size(), a.size());
  c.k2 = ratio_of(sumset(a, b2).size(), a.size());
  const GSet s = sumset(b1, b2);

  c.witness = a;
  c.bound_kind = CoveringBoundKind::kGreedyCount;
  if (use_witness && a.size() <= witness_budget) {
    const PluenneckeWitness w = pluennecke_witness(a, b1, b2, witness_budget);
    if (!w.within_bound) {
      throw VerificationError("Pluennecke witness ratio " + to_string(w.ratio) + " exceeds K1*K2 = " +
                              to_string(c.k1 * c.k2));
    }
    c.witness = w.subset;
    c.bound_kind = CoveringBoundKind::kPluennecke;
  }
  c.witness_sumset_size = sumset(c.witness, s).size();
  c.witness_ratio = ratio_of(c.witness_sumset_size, c.witness.size());
  c.greedy_bound = floor_rational(2 * c.witness_ratio - 1);
  c.size_bound = c.bound_kind == CoveringBoundKind::kPluennecke ? floor_rational(2 * c.k1 * c.k2 - 1)
                                                                : c.greedy_bound;

  c.translates = greedy_translates(c.witness, s);
  c.translates_in_sumset = c.translates.is_subset_of(s);
  c.witness_in_base = c.witness.is_subset_of(a);
  c.greedy_maximal = greedy_maximality_holds(c.witness, s, c.translates);

  const GSet lhs = sumset(difference_set(b1, b1), difference_set(b2, b2));
  const GSet rhs = sumset(difference_set(a, a), difference_set(c.translates, c.translates));
  c.lhs_size = lhs.size();
  c.rhs_size = rhs.size();
  c.inclusion_verified = lhs.is_subset_of(rhs);

  const BigInt t_size = c.translates.size();
  // Union count: the first translate adds |A'| points and each later one at
  // least |A'|/2, so |T| <= 2r - 1 for r = |A'+S|/|A'| <= K1 K2.
  c.size_bound_holds = t_size <= c.size_bound && t_size <= c.greedy_bound;

  if (!c.inclusion_verified) {
    throw VerificationError("covering inclusion B1-B1+B2-B2 in A-A+T-T failed");
  }
  if (!c.size_bound_holds) {
    throw VerificationError("|T| = " + t_size.str() + " exceeds certified bound " +
                            std::min(c.size_bound, c.greedy_bound).str());
  }
  if (!c.translates_in_sumset || !c.witness_in_base || !c.greedy_maximal) {
    throw VerificationError("covering certificate structural check failed");
  }
  return c;
}

int verify_incm(const GSet& a, const GSet& t, int m_max) {
  if (m_max < 1) throw DomainError("verify_incm needs m_max >= 1");
  const GSet d = difference_set(a, a);
  const GSet e = difference_set(t, t);
  GSet lhs = d;  // (m+1)D after the update below
  GSet multiple;  // m(T-T)
  for (int m = 1; m <= m_max; ++m) {
    lhs = sumset(lhs, d);
    multiple = m == 1 ? e : sumset(multiple, e);
    if (!lhs.is_subset_of(sumset(d, multiple))) return m - 1;
  }
  return m_max;
}

bool is_k_covering(const GSet& b, const GSet& t) {
  b.group().require_compatible(t.group());
  return sumset(b, b).is_subset_of(sumset(b, difference_set(t, t)));
}

std::optional<GSet> find_covering_translates(const GSet& b, int max_k, std::size_t budget) {
  if (b.empty()) throw DomainError("find_covering_translates needs a nonempty set");
  const GroupSpec& g = b.group();
  const GSet doubled = sumset(b, b);
  std::vector<Code> pool;
  for (const Code c : difference_set(doubled, b)) {
    if (c != 0) pool.push_back(c);
  }
  std::size_t trials = 0;
  for (int k = 1; k <= max_k; ++k) {
    const auto extra = static_cast<std::size_t>(k - 1);
    if (extra > pool.size()) break;
    std::vector<std::size_t> pick(extra);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      if (++trials > budget) {
        throw BudgetExceeded("covering translate search exceeded " + std::to_string(budget) + " trials");
      }
      std::vector<Code> t{0};
      for (const std::size_t i : pick) t.push_back(pool[i]);
      GSet candidate(g, std::move(t));
      if (is_k_covering(b, candidate)) return candidate;
      std::size_t j = extra;
      while (j > 0 && pick[j - 1] == pool.size() - extra + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t q = j; q < extra; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return std::nullopt;
}

GrowthBoundReport growth_bound_check(const GSet& b, const GSet& t, int m) {
  if (m < 1) throw DomainError("growth_bound_check needs m >= 1");
  if (b.empty() || t.empty()) throw DomainError("growth_bound_check needs nonempty B and T");
  if (!is_k_covering(b, t)) throw DomainError("growth_bound_check: B is not covered by T (B+B not in B+T-T)");
  GrowthBoundReport r;
  r.m = m;
  r.k = static_cast<int>(t.size());
  r.base_size = b.size();
  r.iterated_size = iterated_sum(b, m + 1).size();
  r.difference_span = iterated_sum(difference_set(t, t), m).size();
  r.j_value = j_count(r.k, m);
  r.span_within_j = BigInt(r.difference_span) <= r.j_value;
  r.estjcov_holds = BigInt(r.iterated_size) <= BigInt(r.base_size) * r.j_value;
  r.estecov_applicable = m >= r.k;
  r.estecov_bound = j_bound(r.k, m) * Rational(BigInt(r.base_size));
  r.estecov_holds = !r.estecov_applicable || Rational(BigInt(r.iterated_size)) < r.estecov_bound;
  return r;
}

}  // namespace addcomb
