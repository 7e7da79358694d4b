#include "powermonoid/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace powermonoid {

ZeroSet::ZeroSet(FinSet set) : set_(std::move(set)) {
  if (!set_.contains(0)) throw std::invalid_argument("not in the reduced monoid");
}

ZeroSet as_zero_set(const FinSet& x) { return ZeroSet(x); }

ZeroSet operator+(const ZeroSet& x, const ZeroSet& y) {
  return ZeroSet(sumset(x.set(), y.set()));
}

namespace {

using Mask = std::uint32_t;

// Subset-pair search over the elements of X, indexed 0..n-1. Calls
// `on_pair(y, z)` for every ordered pair of index masks with Y + Z = X and
// both factors nontrivial; stops early when the callback returns false.
class FactorSearch {
 public:
  explicit FactorSearch(const FinSet& x) : elems_(x.values()), n_(elems_.size()) {
    zero_ = static_cast<int>(std::lower_bound(elems_.begin(), elems_.end(), 0) -
                             elems_.begin());
    full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    sum_index_.assign(n_ * n_, -1);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Int s;
        if (__builtin_add_overflow(elems_[i], elems_[j], &s)) continue;
        auto it = std::lower_bound(elems_.begin(), elems_.end(), s);
        if (it != elems_.end() && *it == s) {
          sum_index_[i * n_ + j] = static_cast<int>(it - elems_.begin());
        }
      }
    }
  }

  template <typename F>
  void run(F&& on_pair) {
    const Mask zero_bit = Mask{1} << zero_;
    const Mask others = full_ & ~zero_bit;
    // Enumerate Y over subsets of the nonzero indices.
    for (Mask rest = others;; rest = (rest - 1) & others) {
      if (rest != 0 && !visit_left(rest | zero_bit, on_pair)) return;
      if (rest == 0) break;
    }
  }

  FinSet to_set(Mask m) const {
    std::vector<Int> v;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m & (Mask{1} << i)) v.push_back(elems_[i]);
    }
    return FinSet::from_sorted_unique(std::move(v));
  }

 private:
  template <typename F>
  bool visit_left(Mask y, F& on_pair) {
    // cover[j] = indices of Y + x_j; j is usable only if Y + x_j lies in X.
    cover_.clear();
    candidates_.clear();
    Mask zero_cover = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      Mask c = 0;
      bool ok = true;
      for (std::size_t i = 0; i < n_ && ok; ++i) {
        if (!(y & (Mask{1} << i))) continue;
        const int k = sum_index_[i * n_ + j];
        if (k < 0) ok = false;
        else c |= Mask{1} << k;
      }
      if (!ok) continue;
      if (static_cast<int>(j) == zero_) {
        zero_cover = c;
      } else {
        candidates_.push_back(static_cast<int>(j));
        cover_.push_back(c);
      }
    }
    suffix_.assign(cover_.size() + 1, 0);
    for (std::size_t p = cover_.size(); p-- > 0;) suffix_[p] = suffix_[p + 1] | cover_[p];
    if ((zero_cover | suffix_[0]) != full_) return true;
    return extend(y, 0, Mask{1} << zero_, zero_cover, on_pair);
  }

  template <typename F>
  bool extend(Mask y, std::size_t pos, Mask z, Mask acc, F& on_pair) {
    if ((acc | suffix_[pos]) != full_) return true;
    if (pos == candidates_.size()) {
      if (z == (Mask{1} << zero_)) return true;
      return on_pair(y, z);
    }
    // Include candidates_[pos], then exclude it.
    if (!extend(y, pos + 1, z | (Mask{1} << candidates_[pos]), acc | cover_[pos],
                on_pair)) {
      return false;
    }
    return extend(y, pos + 1, z, acc, on_pair);
  }

  std::vector<Int> elems_;
  std::size_t n_;
  int zero_ = 0;
  Mask full_ = 0;
  std::vector<int> sum_index_;
  std::vector<int> candidates_;
  std::vector<Mask> cover_;
  std::vector<Mask> suffix_;
};

void check_size(const ZeroSet& x, const FactorOptions& options) {
  if (x.size() > options.max_size || x.size() > 32) {
    throw std::length_error("factorization search capped at |X| <= " +
                            std::to_string(std::min<std::size_t>(options.max_size, 32)));
  }
}

}  // namespace

std::vector<Factorization> factorizations(const ZeroSet& x,
                                          const FactorOptions& options) {
  check_size(x, options);
  std::vector<Factorization> out;
  if (x.is_identity()) return out;
  FactorSearch search(x.set());
  search.run([&](Mask y, Mask z) {
    FinSet left = search.to_set(y);
    FinSet right = search.to_set(z);
    if (left <= right) {
      out.push_back({ZeroSet(std::move(left)), ZeroSet(std::move(right)), x});
    }
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  });
  return out;
}

bool is_atom(const ZeroSet& x, const FactorOptions& options) {
  check_size(x, options);
  if (x.is_identity()) return false;
  bool found = false;
  FactorSearch search(x.set());
  search.run([&](Mask, Mask) {
    found = true;
    return false;
  });
  return !found;
}

std::vector<ZeroSet> candidates_with_bounds(Int lo, Int hi) {
  if (lo > 0 || hi < 0) {
    throw std::invalid_argument("bounds must satisfy lo <= 0 <= hi");
  }
  if (lo == hi) return {ZeroSet::identity()};
  std::vector<Int> free;
  for (Int v = lo + 1; v < hi; ++v) {
    if (v != 0) free.push_back(v);
    if (free.size() > 24) throw std::length_error("too many interior points (> 24)");
  }
  std::vector<ZeroSet> out;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Int> v{lo, 0, hi};
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) v.push_back(free[i]);
    }
    out.emplace_back(FinSet::from_values(std::move(v)));
  }
  return out;
}

}  // namespace powermonoid
