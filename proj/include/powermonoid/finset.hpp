#ifndef POWERMONOID_FINSET_HPP
#define POWERMONOID_FINSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace powermonoid {

using Int = std::int64_t;

// A finite nonempty set of integers, stored as a strictly increasing
// sequence. Every constructor normalizes, so two FinSets compare equal iff
// their element sequences are identical. Ordering is lexicographic on the
// sequences.
class FinSet {
 public:
  // Sorts and deduplicates. Throws std::invalid_argument on empty input.
  static FinSet from_values(std::vector<Int> values);
  static FinSet from_values(std::initializer_list<Int> values) {
    return from_values(std::vector<Int>(values));
  }
  // Trusts the caller that `sorted` is strictly increasing and nonempty.
  // Checked in debug builds only.
  static FinSet from_sorted_unique(std::vector<Int> sorted);

  // [[lo, hi]]. Throws std::invalid_argument if lo > hi.
  static FinSet interval(Int lo, Int hi);
  static FinSet singleton(Int x) { return FinSet({x}); }
  static FinSet zero() { return singleton(0); }

  std::span<const Int> elements() const { return elems_; }
  const std::vector<Int>& values() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  Int min() const { return elems_.front(); }
  Int max() const { return elems_.back(); }

  bool contains(Int x) const;
  bool is_subset_of(const FinSet& other) const;
  bool is_interval() const {
    return static_cast<std::size_t>(max() - min()) + 1 == elems_.size();
  }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  explicit FinSet(std::vector<Int> elems) : elems_(std::move(elems)) {}

  std::vector<Int> elems_;
};

struct Bounds {
  Int min;
  Int max;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

Bounds bounds(const FinSet& x);

// X + Y. Dispatches to the bit-parallel kernel when the dense span is
// affordable and to the pairwise kernel otherwise. Throws
// std::overflow_error if an element sum leaves the Int range.
FinSet sumset(const FinSet& x, const FinSet& y);
inline FinSet operator+(const FinSet& x, const FinSet& y) {
  return sumset(x, y);
}

// Union of |Y| shifted copies of X's dense bit-vector (anchored at min X).
// Throws std::length_error when the result span exceeds kMaxDenseSpan.
FinSet sumset_bitwise(const FinSet& x, const FinSet& y);
// Enumerates all |X|*|Y| pairwise sums, then sorts and deduplicates.
FinSet sumset_naive(const FinSet& x, const FinSet& y);

inline constexpr std::uint64_t kMaxDenseSpan = std::uint64_t{1} << 30;

// kX, with 0X = {0}. Computed by repeated doubling.
FinSet kfold(const FinSet& x, std::uint64_t k);
// kX as k-1 successive additions of X.
FinSet kfold_repeated(const FinSet& x, std::uint64_t k);

FinSet translate(const FinSet& x, Int shift);  // l + X
FinSet reflect(const FinSet& x, Int pivot);    // l - X
FinSet negate(const FinSet& x);                // -X
FinSet set_union(const FinSet& x, const FinSet& y);

// Checked arithmetic shared by the kernels.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace powermonoid

template <>
struct std::hash<powermonoid::FinSet> {
  std::size_t operator()(const powermonoid::FinSet& s) const noexcept;
};

#endif  // POWERMONOID_FINSET_HPP
