#include "addcomb/group.hpp"

#include <limits>

#include "addcomb/errors.hpp"
#include "addcomb/numeric.hpp"

namespace addcomb {

namespace {

// Torsion codes must stay well inside int64 so that sums of two codes during
// digit arithmetic cannot overflow.
constexpr std::int64_t kMaxTorsionOrder = std::int64_t{1} << 40;

}  // namespace

GroupSpec::GroupSpec(GroupKind kind, std::int64_t a, std::int64_t b, int rank)
    : kind_(kind), a_(a), b_(b), rank_(rank) {}

GroupSpec GroupSpec::cyclic(std::int64_t modulus) {
  if (modulus < 1) throw DomainError("cyclic modulus must be >= 1");
  if (modulus > (std::int64_t{1} << 62)) throw DomainError("cyclic modulus exceeds 2^62");
  GroupSpec g(GroupKind::kCyclic, modulus, 0, 1);
  g.order_ = modulus;
  return g;
}

GroupSpec GroupSpec::window(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("integer window requires lo <= hi");
  GroupSpec g(GroupKind::kWindow, lo, hi, 1);
  std::int64_t span = 0;
  if (__builtin_sub_overflow(hi, lo, &span) || span == std::numeric_limits<std::int64_t>::max()) {
    g.order_ = std::numeric_limits<std::int64_t>::max();
  } else {
    g.order_ = span + 1;
  }
  return g;
}

GroupSpec GroupSpec::torsion(std::int64_t exponent, int rank) {
  if (exponent < 2) throw DomainError("torsion exponent must be >= 2");
  if (rank < 1) throw DomainError("torsion rank must be >= 1");
  std::int64_t order = 1;
  for (int i = 0; i < rank; ++i) {
    if (order > kMaxTorsionOrder / exponent) {
      throw DomainError("torsion group order exceeds 2^40");
    }
    order *= exponent;
  }
  GroupSpec g(GroupKind::kTorsion, exponent, 0, rank);
  g.order_ = order;
  return g;
}

std::int64_t GroupSpec::modulus() const {
  if (!is_cyclic()) throw GroupMismatch("modulus() on a non-cyclic group");
  return a_;
}

std::int64_t GroupSpec::lo() const {
  if (!is_window()) throw GroupMismatch("lo() on a non-window group");
  return a_;
}

std::int64_t GroupSpec::hi() const {
  if (!is_window()) throw GroupMismatch("hi() on a non-window group");
  return b_;
}

std::int64_t GroupSpec::exponent() const {
  if (!is_torsion()) throw GroupMismatch("exponent() on a non-torsion group");
  return a_;
}

int GroupSpec::rank() const {
  if (!is_torsion()) throw GroupMismatch("rank() on a non-torsion group");
  return rank_;
}

bool GroupSpec::compatible(const GroupSpec& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case GroupKind::kCyclic:
      return a_ == other.a_;
    case GroupKind::kWindow:
      return true;
    case GroupKind::kTorsion:
      return a_ == other.a_ && rank_ == other.rank_;
  }
  return false;
}

void GroupSpec::require_compatible(const GroupSpec& other) const {
  if (!compatible(other)) {
    throw GroupMismatch("group mismatch: " + describe() + " vs " + other.describe());
  }
}

bool GroupSpec::contains(Code code) const {
  switch (kind_) {
    case GroupKind::kCyclic:
    case GroupKind::kTorsion:
      return code >= 0 && code < order_;
    case GroupKind::kWindow:
      return code >= a_ && code <= b_;
  }
  return false;
}

Code GroupSpec::add(Code a, Code b) const {
  switch (kind_) {
    case GroupKind::kCyclic: {
      const std::int64_t s = a + b;  // both < N <= 2^62
      return s >= a_ ? s - a_ : s;
    }
    case GroupKind::kWindow: {
      Code s = 0;
      if (__builtin_add_overflow(a, b, &s)) throw OverflowError("integer window sum overflows int64");
      return s;
    }
    case GroupKind::kTorsion: {
      if (a_ == 2) return a ^ b;
      Code result = 0;
      Code weight = 1;
      for (int i = 0; i < rank_; ++i) {
        const Code da = a % a_;
        const Code db = b % a_;
        Code d = da + db;
        if (d >= a_) d -= a_;
        result += d * weight;
        weight *= a_;
        a /= a_;
        b /= a_;
      }
      return result;
    }
  }
  return 0;
}

Code GroupSpec::negate(Code a) const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return a == 0 ? 0 : a_ - a;
    case GroupKind::kWindow:
      if (a == std::numeric_limits<Code>::min()) throw OverflowError("integer negation overflows int64");
      return -a;
    case GroupKind::kTorsion: {
      if (a_ == 2) return a;
      Code result = 0;
      Code weight = 1;
      for (int i = 0; i < rank_; ++i) {
        const Code d = a % a_;
        result += (d == 0 ? 0 : a_ - d) * weight;
        weight *= a_;
        a /= a_;
      }
      return result;
    }
  }
  return 0;
}

Code GroupSpec::scale(Code a, std::int64_t lambda) const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return mul_mod(a, lambda, a_);
    case GroupKind::kWindow: {
      Code p = 0;
      if (__builtin_mul_overflow(a, lambda, &p)) throw OverflowError("integer dilation overflows int64");
      return p;
    }
    case GroupKind::kTorsion: {
      const std::int64_t l = mod(lambda, a_);
      Code result = 0;
      Code weight = 1;
      for (int i = 0; i < rank_; ++i) {
        result += (a % a_) * l % a_ * weight;
        weight *= a_;
        a /= a_;
      }
      return result;
    }
  }
  return 0;
}

Code GroupSpec::encode(std::span<const std::int64_t> coordinates) const {
  if (static_cast<int>(coordinates.size()) != dimension()) {
    throw DomainError("element has " + std::to_string(coordinates.size()) +
                      " coordinates, group " + describe() + " expects " +
                      std::to_string(dimension()));
  }
  switch (kind_) {
    case GroupKind::kCyclic:
      return mod(coordinates[0], a_);
    case GroupKind::kWindow:
      return coordinates[0];
    case GroupKind::kTorsion: {
      Code result = 0;
      for (const std::int64_t c : coordinates) result = result * a_ + mod(c, a_);
      return result;
    }
  }
  return 0;
}

Element GroupSpec::element(Code code) const {
  if (!is_torsion()) return Element{{code}};
  Element e{std::vector<std::int64_t>(static_cast<std::size_t>(rank_))};
  for (int i = rank_ - 1; i >= 0; --i) {
    e.coordinates[static_cast<std::size_t>(i)] = code % a_;
    code /= a_;
  }
  return e;
}

std::string GroupSpec::describe() const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return "Z/" + std::to_string(a_);
    case GroupKind::kWindow:
      return "Z[" + std::to_string(a_) + "," + std::to_string(b_) + "]";
    case GroupKind::kTorsion:
      return "(Z/" + std::to_string(a_) + ")^" + std::to_string(rank_);
  }
  return "?";
}

}  // namespace addcomb
