#ifndef POWERMONOID_MONOID_HPP
#define POWERMONOID_MONOID_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "powermonoid/finset.hpp"

namespace powermonoid {

// An element of the reduced power monoid: a FinSet containing 0.
class ZeroSet {
 public:
  // Throws std::invalid_argument("not in the reduced monoid") if 0 is missing.
  explicit ZeroSet(FinSet set);
  static ZeroSet identity() { return ZeroSet(FinSet::zero()); }

  const FinSet& set() const { return set_; }
  operator const FinSet&() const { return set_; }  // NOLINT

  Int min() const { return set_.min(); }
  Int max() const { return set_.max(); }
  std::size_t size() const { return set_.size(); }
  bool is_identity() const { return set_.size() == 1; }

  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
  friend auto operator<=>(const ZeroSet&, const ZeroSet&) = default;

 private:
  FinSet set_;
};

ZeroSet as_zero_set(const FinSet& x);
ZeroSet operator+(const ZeroSet& x, const ZeroSet& y);

// A nontrivial decomposition product = left + right with left <= right in
// lexicographic order.
struct Factorization {
  ZeroSet left;
  ZeroSet right;
  ZeroSet product;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorOptions {
  // Enumeration is exponential in |X|; larger inputs are rejected.
  std::size_t max_size = 24;
};

// All unordered nontrivial pairs {Y, Z} with Y + Z = X, sorted by (left,
// right). Both factors are subsets of X because each contains 0.
std::vector<Factorization> factorizations(const ZeroSet& x,
                                          const FactorOptions& options = {});

// True iff X != {0} and X has no nontrivial factorization.
bool is_atom(const ZeroSet& x, const FactorOptions& options = {});

// Every ZeroSet with the given min and max, ordered by the bitmask of the
// chosen interior points (bit i = i-th free interior point, ascending).
// Throws std::invalid_argument unless lo <= 0 <= hi.
std::vector<ZeroSet> candidates_with_bounds(Int lo, Int hi);

}  // namespace powermonoid

template <>
struct std::hash<powermonoid::ZeroSet> {
  std::size_t operator()(const powermonoid::ZeroSet& s) const noexcept {
    return std::hash<powermonoid::FinSet>()(s.set());
  }
};

#endif  // POWERMONOID_MONOID_HPP
