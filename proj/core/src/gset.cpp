#include "addcomb/gset.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <limits>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

constexpr Code kCodeMin = std::numeric_limits<Code>::min();
constexpr Code kCodeMax = std::numeric_limits<Code>::max();

Code saturating_add(Code a, Code b) {
  Code s = 0;
  if (__builtin_add_overflow(a, b, &s)) return a > 0 ? kCodeMax : kCodeMin;
  return s;
}

Code saturating_mul(Code a, Code b) {
  Code p = 0;
  if (__builtin_mul_overflow(a, b, &p)) return ((a < 0) != (b < 0)) ? kCodeMin : kCodeMax;
  return p;
}

Code saturating_neg(Code a) { return a == kCodeMin ? kCodeMax : -a; }

// Bounding window for a derived integer set.
GroupSpec derived_window(Code lo, Code hi) { return GroupSpec::window(std::min(lo, hi), std::max(lo, hi)); }

GroupSpec sum_group(const GroupSpec& a, const GroupSpec& b) {
  a.require_compatible(b);
  if (!a.is_window()) return a;
  return derived_window(saturating_add(a.lo(), b.lo()), saturating_add(a.hi(), b.hi()));
}

GroupSpec negated_group(const GroupSpec& g) {
  if (!g.is_window()) return g;
  return derived_window(saturating_neg(g.hi()), saturating_neg(g.lo()));
}

// Range that any a+b can occupy, as codes.
std::pair<Code, Code> sum_code_range(const GSet& a, const GSet& b) {
  if (a.group().finite()) return {0, a.group().order() - 1};
  return {a.group().add(a.min(), b.min()), a.group().add(a.max(), b.max())};
}

}  // namespace

GSet::GSet(GroupSpec group, std::vector<Code> codes) : group_(std::move(group)), codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  for (const Code c : codes_) {
    if (!group_.contains(c)) {
      throw DomainError("element code " + std::to_string(c) + " is not in " + group_.describe());
    }
  }
}

GSet GSet::from_canonical(GroupSpec group, std::vector<Code> codes) {
  return GSet(std::move(group), std::move(codes), 0);
}

GSet GSet::whole(const GroupSpec& group) {
  if (!group.finite()) throw GroupMismatch("whole() needs a finite group");
  std::vector<Code> codes(static_cast<std::size_t>(group.order()));
  for (std::size_t i = 0; i < codes.size(); ++i) codes[i] = static_cast<Code>(i);
  return from_canonical(group, std::move(codes));
}

GSet GSet::progression(const GroupSpec& group, Code start, std::int64_t step, std::int64_t length) {
  if (length < 0) throw DomainError("progression length must be >= 0");
  if (group.is_cyclic()) start = mod(start, group.modulus());
  std::vector<Code> codes;
  codes.reserve(static_cast<std::size_t>(length));
  Code x = start;
  const Code s = group.is_torsion() ? step : (group.is_cyclic() ? mod(step, group.modulus()) : step);
  for (std::int64_t i = 0; i < length; ++i) {
    codes.push_back(x);
    if (i + 1 < length) x = group.add(x, s);
  }
  if (group.is_window() && !codes.empty()) {
    const auto [lo, hi] = std::minmax_element(codes.begin(), codes.end());
    return GSet(GroupSpec::window(std::min(*lo, group.lo()), std::max(*hi, group.hi())), std::move(codes));
  }
  return GSet(group, std::move(codes));
}

GSet GSet::from_elements(const GroupSpec& group, std::span<const Element> elements) {
  std::vector<Code> codes;
  codes.reserve(elements.size());
  for (const Element& e : elements) codes.push_back(group.encode(e.coordinates));
  return GSet(group, std::move(codes));
}

bool GSet::contains(Code code) const { return std::binary_search(codes_.begin(), codes_.end(), code); }

bool GSet::is_subset_of(const GSet& other) const {
  group_.require_compatible(other.group_);
  return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
}

Indicator::Indicator(Code lo, Code hi) : lo_(lo), hi_(hi) {
  const UInt128 span = static_cast<UInt128>(static_cast<Int128>(hi) - lo + 1);
  dense_ = hi < lo || span <= static_cast<UInt128>(kDenseLimit);
  if (dense_ && hi >= lo) words_.assign(static_cast<std::size_t>((span + 63) / 64), 0);
}

Indicator::Indicator(const GSet& set)
    : Indicator(set.group().finite() ? 0 : (set.empty() ? 0 : set.min()),
                set.group().finite() ? set.group().order() - 1 : (set.empty() ? -1 : set.max())) {
  for (const Code c : set) insert(c);
}

bool Indicator::test(Code code) const {
  if (!dense_) return sparse_.count(code) != 0;
  if (code < lo_ || code > hi_) return false;
  const auto off = static_cast<std::uint64_t>(code - lo_);
  return (words_[off >> 6U] >> (off & 63U)) & 1U;
}

bool Indicator::insert(Code code) {
  if (!dense_) {
    const bool inserted = sparse_.insert(code).second;
    count_ += inserted ? 1 : 0;
    return inserted;
  }
  if (code < lo_ || code > hi_) throw DomainError("indicator insert outside its range");
  const auto off = static_cast<std::uint64_t>(code - lo_);
  std::uint64_t& w = words_[off >> 6U];
  const std::uint64_t bit = std::uint64_t{1} << (off & 63U);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

namespace detail {

GSet sumset_dense(const GSet& a, const GSet& b) {
  const GroupSpec group = sum_group(a.group(), b.group());
  if (a.empty() || b.empty()) return GSet::empty_in(group);
  const auto [lo, hi] = sum_code_range(a, b);
  if (static_cast<Int128>(hi) - lo + 1 > Indicator::kDenseLimit) {
    throw BudgetExceeded("dense sumset range exceeds 2^24 codes");
  }
  const auto span = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::uint64_t> bits((span + 63) / 64, 0);
  const GroupSpec& g = a.group();
  for (const Code x : a) {
    for (const Code y : b) {
      const auto off = static_cast<std::uint64_t>(g.add(x, y) - lo);
      bits[off >> 6U] |= std::uint64_t{1} << (off & 63U);
    }
  }
  std::vector<Code> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word != 0) {
      const int t = std::countr_zero(word);
      out.push_back(lo + static_cast<Code>(w * 64 + static_cast<std::size_t>(t)));
      word &= word - 1;
    }
  }
  return GSet::from_canonical(group, std::move(out));
}

GSet sumset_pairwise(const GSet& a, const GSet& b) {
  const GroupSpec group = sum_group(a.group(), b.group());
  std::vector<Code> out;
  out.reserve(a.size() * b.size());
  const GroupSpec& g = a.group();
  for (const Code x : a) {
    for (const Code y : b) out.push_back(g.add(x, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return GSet::from_canonical(group, std::move(out));
}

}  // namespace detail

GSet sumset(const GSet& a, const GSet& b) {
  a.group().require_compatible(b.group());
  if (a.empty() || b.empty()) return detail::sumset_pairwise(a, b);
  const auto [lo, hi] = sum_code_range(a, b);
  const Int128 span = static_cast<Int128>(hi) - lo + 1;
  const Int128 pairs = static_cast<Int128>(a.size()) * static_cast<Int128>(b.size());
  // The bitmap scan costs span/64 words; use it when that does not dominate.
  if (span <= Indicator::kDenseLimit && span <= 64 * pairs + 4096) return detail::sumset_dense(a, b);
  return detail::sumset_pairwise(a, b);
}

GSet negate(const GSet& a) {
  std::vector<Code> out;
  out.reserve(a.size());
  for (const Code x : a) out.push_back(a.group().negate(x));
  std::sort(out.begin(), out.end());
  return GSet::from_canonical(negated_group(a.group()), std::move(out));
}

GSet difference_set(const GSet& a, const GSet& b) { return sumset(a, negate(b)); }

GSet iterated_sum(const GSet& a, int k) {
  if (k < 1) throw DomainError("iterated_sum needs k >= 1");
  // Binary powering over the sumset operation.
  GSet result;
  bool have = false;
  GSet power = a;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1U) {
      result = have ? sumset(result, power) : power;
      have = true;
    }
    e >>= 1U;
    if (e > 0) power = sumset(power, power);
  }
  return result;
}

GSet dilate(const GSet& a, std::int64_t lambda, bool require_invertible) {
  const GroupSpec& g = a.group();
  if (g.is_torsion()) throw GroupMismatch("dilate is defined for cyclic and integer groups");
  if (require_invertible) {
    if (g.is_cyclic() && gcd(lambda, g.modulus()) != 1) {
      throw DomainError("dilation factor " + std::to_string(lambda) + " is not a unit modulo " +
                        std::to_string(g.modulus()));
    }
    if (g.is_window() && lambda == 0) throw DomainError("dilation factor 0 is not invertible on Z");
  }
  std::vector<Code> out;
  out.reserve(a.size());
  for (const Code x : a) out.push_back(g.scale(x, lambda));
  GroupSpec group = g;
  if (g.is_window()) group = derived_window(saturating_mul(g.lo(), lambda), saturating_mul(g.hi(), lambda));
  return GSet(group, std::move(out));
}

GSet translate(const GSet& a, Code c) {
  const GroupSpec& g = a.group();
  if (g.finite() && !g.contains(c)) throw DomainError("translation element is not in " + g.describe());
  std::vector<Code> out;
  out.reserve(a.size());
  for (const Code x : a) out.push_back(g.add(x, c));
  GroupSpec group = g;
  if (g.is_window()) group = derived_window(saturating_add(g.lo(), c), saturating_add(g.hi(), c));
  return GSet(group, std::move(out));
}

namespace {

template <typename Op>
GSet merge_op(const GSet& a, const GSet& b, Op op) {
  a.group().require_compatible(b.group());
  std::vector<Code> out;
  op(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  GroupSpec group = a.group();
  if (group.is_window()) {
    group = derived_window(std::min(a.group().lo(), b.group().lo()), std::max(a.group().hi(), b.group().hi()));
  }
  return GSet::from_canonical(group, std::move(out));
}

}  // namespace

GSet set_union(const GSet& a, const GSet& b) {
  return merge_op(a, b, [](auto... args) { return std::set_union(args...); });
}

GSet set_intersection(const GSet& a, const GSet& b) {
  return merge_op(a, b, [](auto... args) { return std::set_intersection(args...); });
}

GSet set_minus(const GSet& a, const GSet& b) {
  return merge_op(a, b, [](auto... args) { return std::set_difference(args...); });
}

DoublingRatios doubling_ratio(const GSet& a) {
  if (a.empty()) throw DomainError("doubling ratio of the empty set");
  DoublingRatios r;
  r.size = a.size();
  r.sumset_size = sumset(a, a).size();
  r.difference_size = difference_set(a, a).size();
  const auto n = static_cast<std::int64_t>(r.size);
  r.sum = make_rational(static_cast<std::int64_t>(r.sumset_size), n);
  r.difference = make_rational(static_cast<std::int64_t>(r.difference_size), n);
  r.min = r.sum < r.difference ? r.sum : r.difference;
  return r;
}

}  // namespace addcomb
