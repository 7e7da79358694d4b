#include "powermonoid/finset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <iterator>
#include <stdexcept>
#include <string>

namespace powermonoid {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " + " + std::to_string(b));
  }
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " - " + std::to_string(b));
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " * " + std::to_string(b));
  }
  return out;
}

FinSet FinSet::from_values(std::vector<Int> values) {
  if (values.empty()) {
    throw std::invalid_argument("empty set not an element of the power monoid");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return FinSet(std::move(values));
}

FinSet FinSet::from_sorted_unique(std::vector<Int> sorted) {
  assert(!sorted.empty());
  assert(std::adjacent_find(sorted.begin(), sorted.end(),
                            std::greater_equal<>()) == sorted.end());
  return FinSet(std::move(sorted));
}

FinSet FinSet::interval(Int lo, Int hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  // Size guard: the elements are materialized.
  const auto width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (width >= kMaxDenseSpan) {
    throw std::length_error("interval too wide to materialize");
  }
  std::vector<Int> v(static_cast<std::size_t>(width) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = lo + static_cast<Int>(i);
  return FinSet(std::move(v));
}

bool FinSet::contains(Int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

Bounds bounds(const FinSet& x) { return {x.min(), x.max()}; }

namespace {

// Dense bit-vector over [anchor, anchor + bits).
class BitVec {
 public:
  explicit BitVec(std::uint64_t bits) : words_((bits + 63) / 64) {}

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  // this |= src << shift
  void or_shifted(const BitVec& src, std::uint64_t shift) {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    const std::size_t n = src.words_.size();
    if (bit_shift == 0) {
      for (std::size_t i = 0; i < n; ++i) words_[i + word_shift] |= src.words_[i];
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t w = src.words_[i];
      words_[i + word_shift] |= w << bit_shift;
      if (i + word_shift + 1 < words_.size()) {
        words_[i + word_shift + 1] |= w >> (64 - bit_shift);
      }
    }
  }

  std::vector<Int> to_values(Int anchor) const {
    std::vector<Int> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const int b = std::countr_zero(w);
        out.push_back(anchor + static_cast<Int>(wi * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::uint64_t span_of(const FinSet& x) {
  return static_cast<std::uint64_t>(x.max()) - static_cast<std::uint64_t>(x.min());
}

}  // namespace

FinSet sumset_bitwise(const FinSet& x, const FinSet& y) {
  const Int lo = checked_add(x.min(), y.min());
  checked_add(x.max(), y.max());
  // Iterate the smaller set; shift the denser one.
  const FinSet& shifted = x.size() >= y.size() ? x : y;
  const FinSet& offsets = x.size() >= y.size() ? y : x;
  const std::uint64_t total = span_of(x) + span_of(y) + 1;
  if (span_of(x) >= kMaxDenseSpan || span_of(y) >= kMaxDenseSpan ||
      total > kMaxDenseSpan) {
    throw std::length_error("sumset span exceeds dense bit-vector limit");
  }
  BitVec base(span_of(shifted) + 1);
  for (Int v : shifted) base.set(static_cast<std::uint64_t>(v - shifted.min()));
  BitVec acc(total);
  for (Int o : offsets) acc.or_shifted(base, static_cast<std::uint64_t>(o - offsets.min()));
  return FinSet::from_sorted_unique(acc.to_values(lo));
}

FinSet sumset_naive(const FinSet& x, const FinSet& y) {
  // Every pair a + b is formed individually; no word-level parallelism.
  const Int lo = checked_add(x.min(), y.min());
  const Int hi = checked_add(x.max(), y.max());
  const std::uint64_t pairs = static_cast<std::uint64_t>(x.size()) * y.size();
  const std::uint64_t width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (width != 0 && width <= 8 * pairs + 64) {
    // Mark each sum in a byte table over [lo, hi], then collect.
    std::vector<unsigned char> hit(width, 0);
    for (Int a : x) {
      for (Int b : y) hit[static_cast<std::uint64_t>(a + b) - static_cast<std::uint64_t>(lo)] = 1;
    }
    std::vector<Int> out;
    for (std::uint64_t i = 0; i < width; ++i) {
      if (hit[i]) out.push_back(static_cast<Int>(static_cast<std::uint64_t>(lo) + i));
    }
    return FinSet::from_sorted_unique(std::move(out));
  }
  // Sparse case: each row a + Y is sorted, so rows are merged into the
  // running union.
  std::vector<Int> out;
  std::vector<Int> row(y.size());
  std::vector<Int> merged;
  for (Int a : x) {
    for (std::size_t j = 0; j < y.size(); ++j) row[j] = a + y.values()[j];
    merged.clear();
    std::set_union(out.begin(), out.end(), row.begin(), row.end(), std::back_inserter(merged));
    out.swap(merged);
  }
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet sumset(const FinSet& x, const FinSet& y) {
  if (x.size() == 1) return translate(y, x.min());
  if (y.size() == 1) return translate(x, y.min());
  const std::uint64_t sx = span_of(x);
  const std::uint64_t sy = span_of(y);
  // The dense path costs about |small| * span/64 word operations; pairwise
  // enumeration costs |X||Y| log(|X||Y|). Prefer dense unless the sets are
  // very sparse.
  const bool affordable = sx < kMaxDenseSpan && sy < kMaxDenseSpan &&
                          sx + sy + 1 <= kMaxDenseSpan;
  if (affordable) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(x.size()) * y.size();
    if ((sx + sy) / 64 <= 4 * pairs + 64) return sumset_bitwise(x, y);
  }
  return sumset_naive(x, y);
}

FinSet kfold(const FinSet& x, std::uint64_t k) {
  FinSet result = FinSet::zero();
  FinSet power = x;
  while (k > 0) {
    if (k & 1) result = sumset(result, power);
    k >>= 1;
    if (k > 0) power = sumset(power, power);
  }
  return result;
}

FinSet kfold_repeated(const FinSet& x, std::uint64_t k) {
  if (k == 0) return FinSet::zero();
  FinSet result = x;
  for (std::uint64_t i = 1; i < k; ++i) result = sumset(result, x);
  return result;
}

FinSet translate(const FinSet& x, Int shift) {
  checked_add(x.min(), shift);
  checked_add(x.max(), shift);
  std::vector<Int> out(x.begin(), x.end());
  for (Int& v : out) v += shift;
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet reflect(const FinSet& x, Int pivot) {
  checked_sub(pivot, x.min());
  checked_sub(pivot, x.max());
  std::vector<Int> out;
  out.reserve(x.size());
  for (auto it = x.values().rbegin(); it != x.values().rend(); ++it) {
    out.push_back(pivot - *it);
  }
  return FinSet::from_sorted_unique(std::move(out));
}

FinSet negate(const FinSet& x) { return reflect(x, 0); }

FinSet set_union(const FinSet& x, const FinSet& y) {
  std::vector<Int> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return FinSet::from_sorted_unique(std::move(out));
}

}  // namespace powermonoid

std::size_t std::hash<powermonoid::FinSet>::operator()(
    const powermonoid::FinSet& s) const noexcept {
  // FNV-1a over the element words.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : s) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
