#include "addcomb/instances.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <unordered_set>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

std::string make_id(const char* prefix, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%06zu", prefix, index);
  return buf;
}

void push(std::vector<Instance>& out, const GeneratorSpec& spec, const char* prefix, const char* family, GSet set) {
  if (out.size() >= spec.budget) {
    throw BudgetExceeded("instance stream exceeds budget " + std::to_string(spec.budget));
  }
  out.push_back({make_id(prefix, out.size()), family, std::move(set)});
}

std::vector<Instance> exhaustive(const GeneratorSpec& spec) {
  const GroupSpec& g = spec.group;
  if (!g.finite()) throw DomainError("exhaustive enumeration needs a finite group");
  if (spec.normalize && !g.is_cyclic()) throw DomainError("affine normalization is defined for Z/N only");
  const auto order = static_cast<std::uint64_t>(g.order());
  if (spec.max_size < 1) throw DomainError("exhaustive enumeration needs max_size >= 1");
  std::uint64_t total = 0;
  for (int s = 1; s <= spec.max_size && static_cast<std::uint64_t>(s) <= order; ++s) {
    total += binomial_saturating(order, static_cast<std::uint64_t>(s));
  }
  if (!spec.normalize && total > spec.budget) {
    throw BudgetExceeded("exhaustive enumeration of " + std::to_string(total) + " sets exceeds budget " +
                         std::to_string(spec.budget));
  }

  std::vector<Instance> out;
  for (int s = 1; s <= spec.max_size && static_cast<std::uint64_t>(s) <= order; ++s) {
    std::vector<Code> pick(static_cast<std::size_t>(s));
    std::iota(pick.begin(), pick.end(), Code{0});
    const auto n = static_cast<Code>(order);
    while (true) {
      GSet set = GSet::from_canonical(g, pick);
      if (!spec.normalize || affine_normal_form(set) == set) push(out, spec, "exh", "subset", std::move(set));
      std::size_t j = pick.size();
      while (j > 0 && pick[j - 1] == n - static_cast<Code>(pick.size() - j) - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < pick.size(); ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return out;
}

std::vector<Instance> random_sets(const GeneratorSpec& spec) {
  const GroupSpec& g = spec.group;
  if (!g.finite()) throw DomainError("random generation needs a finite group");
  if (spec.size < 1 || spec.size > g.order()) throw DomainError("random generation needs 1 <= |A| <= |G|");
  if (spec.count < 0) throw DomainError("random generation needs count >= 0");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<Code> pick(0, g.order() - 1);
  std::vector<Instance> out;
  for (int i = 0; i < spec.count; ++i) {
    std::unordered_set<Code> chosen;
    std::vector<Code> codes;
    while (codes.size() < static_cast<std::size_t>(spec.size)) {
      const Code c = pick(rng);
      if (chosen.insert(c).second) codes.push_back(c);
    }
    push(out, spec, "rnd", "random", GSet(g, std::move(codes)));
  }
  return out;
}

std::vector<Instance> structured(const GeneratorSpec& spec) {
  const GroupSpec& g = spec.group;
  std::vector<Instance> out;
  if (g.is_torsion()) {
    // Subspaces spanned by the first j basis vectors, and their translates by
    // the last basis vector.
    const int rank = g.rank();
    for (int j = 0; j <= rank; ++j) {
      std::vector<Code> basis;
      for (int i = 0; i < j; ++i) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        basis.push_back(g.encode(e));
      }
      GSet span = GSet::from_canonical(g, {0});
      for (const Code b : basis) {
        GSet line = GSet::progression(g, 0, b, g.exponent());
        span = sumset(span, line);
      }
      push(out, spec, "str", "subspace", span);
      if (j < rank) {
        std::vector<std::int64_t> last(static_cast<std::size_t>(rank), 0);
        last.back() = 1;
        push(out, spec, "str", "coset", translate(span, g.encode(last)));
      }
    }
    return out;
  }

  std::mt19937_64 rng(spec.seed);
  const std::int64_t span = g.is_cyclic() ? g.modulus() : g.order();
  std::uniform_int_distribution<Code> start_dist(0, std::max<std::int64_t>(span - 1, 0));
  for (const int l : spec.lengths) {
    if (l < 1) throw DomainError("progression length must be >= 1");
    for (const std::int64_t d : {1, 2, 3}) {
      const Code a = g.is_cyclic() ? start_dist(rng) : g.lo();
      push(out, spec, "str", "progression", GSet::progression(g, a, d, l));
    }
    // Two intervals of length l, separated by l and 2l.
    for (const std::int64_t sep : {2, 3}) {
      const Code a = g.is_cyclic() ? start_dist(rng) : g.lo();
      const GSet left = GSet::progression(g, a, 1, l);
      const GSet right = GSet::progression(g, a + sep * l, 1, l);
      push(out, spec, "str", "union", set_union(left, right));
    }
  }
  return out;
}

}  // namespace

GSet affine_normal_form(const GSet& a) {
  if (!a.group().is_cyclic()) throw GroupMismatch("affine_normal_form needs Z/N");
  if (a.empty()) return a;
  const std::int64_t n = a.group().modulus();
  std::vector<Code> best;
  std::vector<Code> image(a.size());
  for (std::int64_t lambda = 1; lambda < n || (n == 1 && lambda == 1); ++lambda) {
    if (gcd(lambda, n) != 1) continue;
    for (const Code anchor : a) {
      // Translate so that lambda * anchor lands on 0; the smallest vector
      // starts with 0, so only these translations can win.
      for (std::size_t i = 0; i < a.size(); ++i) image[i] = mul_mod(mod(a[i] - anchor, n), lambda, n);
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
    if (n == 1) break;
  }
  return GSet::from_canonical(a.group(), std::move(best));
}

std::vector<Instance> enumerate_instances(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kExhaustive:
      return exhaustive(spec);
    case GeneratorKind::kRandom:
      return random_sets(spec);
    case GeneratorKind::kStructured:
      return structured(spec);
  }
  throw DomainError("unknown generator kind");
}

}  // namespace addcomb
