#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <vector>

#include "addcomb/group.hpp"
#include "addcomb/numeric.hpp"

namespace addcomb {

// Finite subset of a group: canonical, sorted, duplicate-free element codes.
// Immutable once built.
class GSet {
 public:
  GSet() : group_(GroupSpec::cyclic(1)) {}

  // Canonicalizes `codes` (sort + dedup) and checks membership in `group`.
  GSet(GroupSpec group, std::vector<Code> codes);
  GSet(GroupSpec group, std::initializer_list<Code> codes)
      : GSet(std::move(group), std::vector<Code>(codes)) {}

  // Trusts the caller: `codes` must already be sorted, unique and in range.
  static GSet from_canonical(GroupSpec group, std::vector<Code> codes);

  static GSet empty_in(GroupSpec group) { return from_canonical(std::move(group), {}); }
  static GSet whole(const GroupSpec& group);
  // {start, start+step, ..., start+(length-1)*step}.
  static GSet progression(const GroupSpec& group, Code start, std::int64_t step, std::int64_t length);
  static GSet from_elements(const GroupSpec& group, std::span<const Element> elements);

  const GroupSpec& group() const { return group_; }
  std::span<const Code> elements() const { return codes_; }
  const std::vector<Code>& codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Code min() const { return codes_.front(); }
  Code max() const { return codes_.back(); }
  Code operator[](std::size_t i) const { return codes_[i]; }
  auto begin() const { return codes_.begin(); }
  auto end() const { return codes_.end(); }

  bool contains(Code code) const;
  bool is_subset_of(const GSet& other) const;

  // Same group and same elements. Window bounding boxes are ignored.
  friend bool operator==(const GSet& a, const GSet& b) {
    return a.group_.compatible(b.group_) && a.codes_ == b.codes_;
  }

 private:
  GSet(GroupSpec group, std::vector<Code> codes, int /*trusted*/)
      : group_(std::move(group)), codes_(std::move(codes)) {}

  GroupSpec group_;
  std::vector<Code> codes_;
};

// Dense membership bitmap over a contiguous code range, with a hashed
// fallback when the range is too wide.
class Indicator {
 public:
  static constexpr std::int64_t kDenseLimit = std::int64_t{1} << 24;

  Indicator(Code lo, Code hi);
  explicit Indicator(const GSet& set);

  bool dense() const { return dense_; }
  bool test(Code code) const;
  // Returns true if the code was newly inserted.
  bool insert(Code code);
  std::size_t count() const { return count_; }

 private:
  Code lo_ = 0;
  Code hi_ = -1;
  bool dense_ = true;
  std::vector<std::uint64_t> words_;
  std::unordered_set<Code> sparse_;
  std::size_t count_ = 0;
};

GSet sumset(const GSet& a, const GSet& b);
GSet difference_set(const GSet& a, const GSet& b);
GSet negate(const GSet& a);
// k-fold sumset kA, k >= 1.
GSet iterated_sum(const GSet& a, int k);
// {lambda * a}. With require_invertible, lambda must be a unit mod N
// (cyclic) or nonzero (window) so the map is a bijection.
GSet dilate(const GSet& a, std::int64_t lambda, bool require_invertible = true);
GSet translate(const GSet& a, Code c);

GSet set_union(const GSet& a, const GSet& b);
GSet set_intersection(const GSet& a, const GSet& b);
// a \ b.
GSet set_minus(const GSet& a, const GSet& b);

struct DoublingRatios {
  std::size_t size = 0;
  std::size_t sumset_size = 0;
  std::size_t difference_size = 0;
  Rational sum;         // |A+A|/|A|
  Rational difference;  // |A-A|/|A|
  Rational min;         // min of both
};

DoublingRatios doubling_ratio(const GSet& a);

namespace detail {

// The two sumset strategies; `sumset` picks one automatically.
GSet sumset_dense(const GSet& a, const GSet& b);
GSet sumset_pairwise(const GSet& a, const GSet& b);

}  // namespace detail

}  // namespace addcomb
