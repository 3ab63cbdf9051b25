#include "addcomb/rectify.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

void require_cyclic(const GSet& a, const char* what) {
  if (!a.group().is_cyclic()) throw GroupMismatch(std::string(what) + " needs a cyclic group Z/N");
  if (a.empty()) throw DomainError(std::string(what) + " needs a nonempty set");
}

// Longest circular gap of a sorted residue list. Returns (gap, start) where
// start is the element right after the gap; ties go to the smallest start.
std::pair<std::int64_t, Code> longest_gap(const std::vector<Code>& sorted, std::int64_t n) {
  std::int64_t best_gap = -1;
  Code best_start = 0;
  const std::size_t size = sorted.size();
  for (std::size_t i = 0; i < size; ++i) {
    const Code next = sorted[(i + 1) % size];
    const std::int64_t gap = i + 1 < size ? next - sorted[i] : next + n - sorted[i];
    if (gap > best_gap || (gap == best_gap && next < best_start)) {
      best_gap = gap;
      best_start = next;
    }
  }
  return {best_gap, best_start};
}

// Smallest integer strictly below delta * n.
std::int64_t largest_below(const Rational& delta, std::int64_t n) {
  const Rational x = delta * Rational(BigInt(n));
  BigInt c = -floor_rational(-x);  // ceil
  return static_cast<std::int64_t>(c) - 1;
}

// Best circular window of length l (ties: smallest start), then trimmed to
// the elements it covers.
std::pair<CircularInterval, std::size_t> best_window(const GSet& b, std::int64_t l) {
  const std::int64_t n = b.group().modulus();
  const auto size = static_cast<std::int64_t>(b.size());
  if (l >= n - 1) {
    // Every window is the whole group.
    return {{b.min(), b.max() - b.min()}, 0};
  }
  // Doubled prefix counts over [0, 2N).
  std::vector<std::int64_t> prefix(2 * static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint8_t> mark(static_cast<std::size_t>(n), 0);
  for (const Code x : b) mark[static_cast<std::size_t>(x)] = 1;
  for (std::int64_t i = 0; i < 2 * n; ++i) {
    prefix[static_cast<std::size_t>(i + 1)] = prefix[static_cast<std::size_t>(i)] + mark[static_cast<std::size_t>(i % n)];
  }
  std::int64_t best_in = -1;
  Code best_start = 0;
  for (Code s = 0; s < n; ++s) {
    const std::int64_t in = prefix[static_cast<std::size_t>(s + l + 1)] - prefix[static_cast<std::size_t>(s)];
    if (in > best_in) {
      best_in = in;
      best_start = s;
    }
  }
  std::int64_t lo = l;
  std::int64_t hi = 0;
  for (const Code x : b) {
    const std::int64_t off = mod(x - best_start, n);
    if (off <= l) {
      lo = std::min(lo, off);
      hi = std::max(hi, off);
    }
  }
  CircularInterval iv{mod(best_start + lo, n), hi - lo};
  return {iv, static_cast<std::size_t>(size - best_in)};
}

// Next nondecreasing index tuple over [0, n); false after the last one.
bool next_multiset(std::vector<std::size_t>& pick, std::size_t n) {
  std::size_t j = pick.size();
  while (j > 0 && pick[j - 1] == n - 1) --j;
  if (j == 0) return false;
  ++pick[j - 1];
  for (std::size_t t = j; t < pick.size(); ++t) pick[t] = pick[j - 1];
  return true;
}

std::vector<std::size_t> nth_multiset(std::size_t n, int k, std::uint64_t index) {
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  for (std::uint64_t i = 0; i < index; ++i) next_multiset(pick, n);
  return pick;
}

LevResult lev_with_coefficient(const GSet& b, const Rational& eps, const Rational& delta, double coefficient) {
  LevResult r;
  const std::int64_t n = b.group().modulus();
  const Rational size(BigInt(b.size()));
  r.coefficient = coefficient;
  r.threshold = to_double((1 - 8 * eps * delta * delta) * size);
  r.applicable = coefficient >= r.threshold;
  r.max_length = largest_below(delta, n);
  if (!r.applicable || r.max_length < 0) return r;
  const auto [iv, exceptions] = best_window(b, r.max_length);
  r.interval = iv;
  r.exceptions = exceptions;
  r.conclusion_holds = Rational(BigInt(exceptions)) < eps * size &&
                       Rational(BigInt(iv.length)) < delta * Rational(BigInt(n));
  return r;
}

}  // namespace

DiameterWitness diameter(const GSet& a, std::int64_t budget) {
  require_cyclic(a, "diameter");
  const std::int64_t n = a.group().modulus();
  DiameterWitness w;
  w.modulus = n;
  if (n > budget) {
    throw BudgetExceeded("diameter scan over Z/" + std::to_string(n) + " exceeds budget " + std::to_string(budget));
  }
  if (n == 1) {
    w.dilation = 1;
    w.normalized = GSet::from_canonical(GroupSpec::window(0, 0), {0});
    w.contained = true;
    return w;
  }

  std::int64_t best_l = n;
  std::vector<Code> scaled(a.size());
  for (std::int64_t d = 1; d <= n / 2; ++d) {
    if (gcd(d, n) != 1) continue;
    ++w.dilations_scanned;
    const std::int64_t lambda = inverse_mod(d, n);
    for (std::size_t i = 0; i < a.size(); ++i) scaled[i] = mul_mod(a[i], lambda, n);
    std::sort(scaled.begin(), scaled.end());
    const auto [gap, start] = longest_gap(scaled, n);
    const std::int64_t l = n - gap;
    if (l < best_l) {
      best_l = l;
      w.dilation = d;
      w.shift = mul_mod(start, d, n);
    }
  }
  w.length = best_l;

  const std::int64_t lambda = inverse_mod(w.dilation, n);
  std::vector<Code> normalized;
  normalized.reserve(a.size());
  bool inside = true;
  for (const Code x : a) {
    const Code y = mul_mod(mod(x - w.shift, n), lambda, n);
    inside = inside && y <= w.length;
    normalized.push_back(y);
  }
  std::sort(normalized.begin(), normalized.end());
  w.contained = inside;
  w.normalized = GSet::from_canonical(GroupSpec::window(0, w.length), std::move(normalized));
  return w;
}

LevResult lev_interval(const GSet& b, const Rational& eps, const Rational& delta) {
  require_cyclic(b, "lev_interval");
  if (eps <= 0 || eps >= 1) throw DomainError("lev_interval needs eps in (0,1)");
  if (delta <= 0 || delta * 2 >= 1) throw DomainError("lev_interval needs delta in (0,1/2)");
  return lev_with_coefficient(b, eps, delta, std::abs(fourier_coefficient(b, 1)));
}

GapCoverResult gap_cover(const GSet& a, Code b, std::int64_t l) {
  require_cyclic(a, "gap_cover");
  const std::int64_t n = a.group().modulus();
  if (l < 0 || 3 * l >= n) throw DomainError("gap_cover needs 0 <= l < N/3");
  GapCoverResult r;
  const CircularInterval target{mod(b, n), l};
  for (const Code d : difference_set(a, a)) r.exceptions += target.contains(d, n) ? 0 : 1;
  r.hypothesis_holds = 2 * r.exceptions < a.size();
  if (!r.hypothesis_holds) return r;
  r.interval = {longest_gap(a.codes(), n).second, l};
  r.conclusion_holds = std::all_of(a.begin(), a.end(), [&](Code x) { return r.interval.contains(x, n); });
  return r;
}

DiamSpectrumReport diam_from_spectrum(const GSet& a, const Rational& delta) {
  require_cyclic(a, "diam_from_spectrum");
  const std::int64_t n = a.group().modulus();
  if (!is_prime(static_cast<std::uint64_t>(n))) throw DomainError("diam_from_spectrum needs N prime");
  if (delta <= 0 || delta * 3 >= 1) throw DomainError("diam_from_spectrum needs delta in (0,1/3)");

  DiamSpectrumReport r;
  const GSet d = difference_set(a, a);
  const Rational size_a(BigInt(a.size()));
  const Rational size_d(BigInt(d.size()));
  const SpectrumReport spec = spectrum(d);
  r.frequency = spec.max_index;
  r.coefficient = spec.max_magnitude;
  r.threshold = to_double(size_d - 4 * delta * delta * size_a);
  r.true_diameter = diameter(a).length;
  r.hypothesis_met = r.coefficient >= r.threshold;
  if (!r.hypothesis_met) return r;

  // The Fourier coefficient of rD at 1 is D^(r), so the r = 1 case applies
  // to the dilate rA.
  const GSet ar = dilate(a, r.frequency);
  const GSet dr = difference_set(ar, ar);
  const Rational eps = size_a / (2 * size_d);
  r.lev = lev_with_coefficient(dr, eps, delta, r.coefficient);
  if (r.lev.conclusion_holds && 3 * r.lev.interval.length < n) {
    r.cover = gap_cover(ar, r.lev.interval.start, r.lev.interval.length);
    r.chain_length = r.lev.interval.length;
  }
  r.conclusion_holds = r.lev.conclusion_holds && r.cover.hypothesis_holds && r.cover.conclusion_holds &&
                       r.true_diameter <= r.chain_length &&
                       Rational(BigInt(r.true_diameter)) < delta * Rational(BigInt(n));
  return r;
}

IsoCheck freiman_iso_check(const GSet& domain, const GroupSpec& codomain, std::span<const Code> images, int k,
                           std::uint64_t budget) {
  if (k < 1) throw DomainError("freiman_iso_check needs k >= 1");
  if (images.size() != domain.size()) throw DomainError("freiman_iso_check: f must be defined on every element");
  {
    std::vector<Code> sorted(images.begin(), images.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DomainError("freiman_iso_check: f is not injective");
    }
    for (const Code c : sorted) {
      if (!codomain.contains(c)) throw DomainError("freiman_iso_check: image outside the codomain");
    }
  }
  IsoCheck r;
  r.is_isomorphism = true;
  const std::size_t n = domain.size();
  if (n == 0) return r;
  const std::uint64_t total = binomial_saturating(n + static_cast<std::size_t>(k) - 1, static_cast<std::uint64_t>(k));
  if (total > budget) {
    throw BudgetExceeded("freiman_iso_check: " + std::to_string(total) + " multisets exceed budget " +
                         std::to_string(budget));
  }

  const GroupSpec& g = domain.group();
  // Each multiset is labeled by the first multiset (in enumeration order)
  // sharing its sum, on each side. Partitions agree iff labels agree.
  std::unordered_map<Code, std::uint64_t> first_dom;
  std::unordered_map<Code, std::uint64_t> first_img;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  std::uint64_t index = 0;
  do {
    Code s_dom = 0;
    Code s_img = 0;
    for (const std::size_t i : pick) {
      s_dom = g.add(s_dom, domain[i]);
      s_img = codomain.add(s_img, images[i]);
    }
    const std::uint64_t dom_label = first_dom.try_emplace(s_dom, index).first->second;
    const std::uint64_t img_label = first_img.try_emplace(s_img, index).first->second;
    if (dom_label != img_label) {
      // The older label names a multiset agreeing with `pick` on one side only.
      r.is_isomorphism = false;
      r.first = nth_multiset(n, k, dom_label != index ? dom_label : img_label);
      r.second = pick;
      r.multisets = index + 1;
      return r;
    }
    ++index;
  } while (next_multiset(pick, n));
  r.multisets = index;
  return r;
}

RectifyResult rectify(const GSet& a, int k, std::uint64_t iso_budget) {
  require_cyclic(a, "rectify");
  if (k < 2) throw DomainError("rectify needs k >= 2");
  const std::int64_t n = a.group().modulus();
  if (!is_prime(static_cast<std::uint64_t>(n))) throw DomainError("rectify needs N prime");

  RectifyResult r;
  r.diameter = diameter(a);
  const std::int64_t l = r.diameter.length;
  if (static_cast<Int128>(k) * l >= n) return r;

  RectificationWitness w;
  w.k = k;
  w.modulus = n;
  w.dilation = inverse_mod(r.diameter.dilation, n);
  w.shift = r.diameter.shift;
  w.length = l;
  w.image = r.diameter.normalized;
  w.images.reserve(a.size());
  for (const Code x : a) w.images.push_back(mul_mod(mod(x - w.shift, n), w.dilation, n));
  const std::uint64_t multisets = binomial_saturating(a.size() + static_cast<std::size_t>(k) - 1,
                                                      static_cast<std::uint64_t>(k));
  if (multisets <= iso_budget) {
    w.verified = freiman_iso_check(a, w.image.group(), w.images, k, iso_budget).is_isomorphism;
    if (!w.verified) throw VerificationError("rectify: the produced map is not an F_k-isomorphism");
  } else {
    w.certification_skipped = true;
  }
  r.success = true;
  r.witness = std::move(w);
  return r;
}

IntegerModel minimal_integer_model(const GSet& a, int k, int rounds, std::int64_t diameter_budget,
                                   std::uint64_t iso_budget) {
  if (!a.group().is_window()) throw GroupMismatch("minimal_integer_model needs an integer set");
  if (a.empty()) throw DomainError("minimal_integer_model needs a nonempty set");
  if (k < 2) throw DomainError("minimal_integer_model needs k >= 2");
  if (rounds < 1) throw DomainError("minimal_integer_model needs rounds >= 1");

  IntegerModel model;
  model.k = k;
  model.original = a;
  std::vector<Code> current;
  for (const Code x : a) current.push_back(x - a.min() + 1);
  model.images = current;

  const auto multisets = binomial_saturating(a.size() + static_cast<std::size_t>(k) - 1, static_cast<std::uint64_t>(k));
  const bool certify = multisets <= iso_budget;
  model.certification_skipped = !certify;

  for (int round = 0; round < rounds; ++round) {
    ModelRound mr;
    const std::int64_t bound = *std::max_element(current.begin(), current.end());
    mr.bound_before = bound;
    const auto kl = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(bound);
    mr.prime = static_cast<std::int64_t>(smallest_prime_in(kl, 2 * kl));
    if (mr.prime == 0) throw DomainError("no prime in (kL, 2kL]");

    std::vector<Code> residues(current);
    for (Code& x : residues) x = mod(x, mr.prime);
    const GSet embedded(GroupSpec::cyclic(mr.prime), residues);
    const DiameterWitness dw = diameter(embedded, diameter_budget);
    mr.diameter = dw.length;
    mr.dilation = inverse_mod(dw.dilation, mr.prime);
    mr.shift = dw.shift;
    if (dw.length + 1 >= bound) {
      model.rounds.push_back(mr);
      break;
    }
    // Elements of `current` lie in [1, L] with L < N / k, so reduction mod N is
    // an F_k-isomorphism; the normalized set is one as well since k l < N.
    std::vector<Code> next;
    next.reserve(current.size());
    for (const Code x : current) next.push_back(mul_mod(mod(x - mr.shift, mr.prime), mr.dilation, mr.prime) + 1);
    if (certify) {
      const GSet before(GroupSpec::window(1, bound), current);
      std::vector<Code> aligned;  // images in the sorted order of `before`
      for (const Code x : before) {
        aligned.push_back(next[static_cast<std::size_t>(std::find(current.begin(), current.end(), x) - current.begin())]);
      }
      mr.certified = freiman_iso_check(before, GroupSpec::window(1, dw.length + 1), aligned, k, iso_budget).is_isomorphism;
      if (!mr.certified) throw VerificationError("minimal_integer_model: round map is not an F_k-isomorphism");
    } else {
      mr.certification_skipped = true;
    }
    current = std::move(next);
    model.rounds.push_back(mr);
  }

  // current[i] is the image of the i-th element of the original set.
  model.images = current;
  model.model = GSet(GroupSpec::window(1, *std::max_element(current.begin(), current.end())), current);
  if (certify) {
    model.composite_certified = freiman_iso_check(a, model.model.group(), model.images, k, iso_budget).is_isomorphism;
    if (!model.composite_certified) throw VerificationError("minimal_integer_model: composite map is not an F_k-isomorphism");
  }
  return model;
}

}  // namespace addcomb
