#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace addcomb {

enum class GroupKind { kCyclic, kWindow, kTorsion };

// Elements are carried as a single integer code:
//   cyclic Z/N      -> residue in [0, N)
//   integer window  -> the integer itself
//   (Z/r)^n         -> mixed-radix number, first coordinate most significant,
//                      so numeric order on codes is lexicographic order on
//                      coordinate tuples.
using Code = std::int64_t;

// An element in tuple form (length 1 for cyclic and window groups).
struct Element {
  std::vector<std::int64_t> coordinates;

  friend bool operator==(const Element&, const Element&) = default;
};

// The ambient group. Integer windows are the integers with a bounding box
// that travels with a set; every window is compatible with every other one
// and sums never wrap.
class GroupSpec {
 public:
  static GroupSpec cyclic(std::int64_t modulus);
  static GroupSpec window(std::int64_t lo, std::int64_t hi);
  static GroupSpec torsion(std::int64_t exponent, int rank);

  GroupKind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == GroupKind::kCyclic; }
  bool is_window() const { return kind_ == GroupKind::kWindow; }
  bool is_torsion() const { return kind_ == GroupKind::kTorsion; }
  bool finite() const { return kind_ != GroupKind::kWindow; }

  std::int64_t modulus() const;
  std::int64_t lo() const;
  std::int64_t hi() const;
  std::int64_t exponent() const;
  int rank() const;

  // |G| for cyclic and torsion groups. For windows this is hi - lo + 1, the
  // size of the bounding box and not a group order.
  std::int64_t order() const { return order_; }

  // Tuple length of an element.
  int dimension() const { return is_torsion() ? rank_ : 1; }

  bool compatible(const GroupSpec& other) const;
  void require_compatible(const GroupSpec& other) const;

  // True iff `code` is in canonical range (window: inside [lo, hi]).
  bool contains(Code code) const;

  Code add(Code a, Code b) const;
  Code negate(Code a) const;
  Code subtract(Code a, Code b) const { return add(a, negate(b)); }
  // lambda * a; coordinate-wise in torsion groups.
  Code scale(Code a, std::int64_t lambda) const;
  Code zero() const { return 0; }

  // Reduces coordinates into canonical range (cyclic/torsion). Window
  // coordinates are taken as-is.
  Code encode(std::span<const std::int64_t> coordinates) const;
  Element element(Code code) const;

  std::string describe() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, std::int64_t a, std::int64_t b, int rank);

  GroupKind kind_ = GroupKind::kCyclic;
  std::int64_t a_ = 1;  // modulus | lo | exponent
  std::int64_t b_ = 0;  // hi (window only)
  int rank_ = 1;
  std::int64_t order_ = 1;
};

}  // namespace addcomb
