#include "powermonoid/search.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

namespace powermonoid {

WindowUniverse::WindowUniverse(int m) : m_(m) {
  if (m < 1 || m > kMaxHalfWidth) {
    throw std::out_of_range("window half-width must be in [1, " +
                            std::to_string(kMaxHalfWidth) + "], got " + std::to_string(m));
  }
  const std::size_t n = std::size_t{1} << (2 * m);
  const int width = 2 * m + 1;
  // dense[i]: bit (v + m) set for each v in element i.
  std::vector<std::uint32_t> dense(n);
  std::vector<int> by_pattern(std::size_t{1} << width, -1);
  elements_.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::vector<Int> v{0};
    std::uint32_t pattern = std::uint32_t{1} << m;
    for (int t = 1; t <= m; ++t) {
      if (mask & (std::size_t{1} << (2 * (t - 1)))) {
        v.push_back(t);
        pattern |= std::uint32_t{1} << (m + t);
      }
      if (mask & (std::size_t{1} << (2 * (t - 1) + 1))) {
        v.push_back(-t);
        pattern |= std::uint32_t{1} << (m - t);
      }
    }
    elements_.emplace_back(FinSet::from_values(std::move(v)));
    dense[mask] = pattern;
    by_pattern[pattern] = static_cast<int>(mask);
  }

  // Sum patterns live on [-2m, 2m] at offset 2m; the window is bits [m, 3m].
  const std::uint64_t window = ((std::uint64_t{1} << width) - 1) << m;
  sums_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::uint64_t acc = 0;
      std::uint32_t q = dense[j];
      while (q != 0) {
        const int t = __builtin_ctz(q);
        acc |= std::uint64_t{dense[i]} << t;
        q &= q - 1;
      }
      if ((acc & ~window) != 0) continue;
      const auto k = static_cast<std::int16_t>(by_pattern[acc >> m]);
      sums_[i * n + j] = k;
      sums_[j * n + i] = k;
    }
  }
}

std::optional<std::size_t> WindowUniverse::index_of(const FinSet& x) const {
  if (x.min() < -m_ || x.max() > m_ || !x.contains(0)) return std::nullopt;
  std::size_t mask = 0;
  for (Int v : x) {
    if (v > 0) mask |= std::size_t{1} << (2 * (v - 1));
    if (v < 0) mask |= std::size_t{1} << (2 * (-v - 1) + 1);
  }
  return mask;
}

std::size_t WindowUniverse::in_window_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(sums_.begin(), sums_.end(), [](std::int16_t s) { return s >= 0; }));
}

namespace {

constexpr int kPair01 = 1;   // {0,1}
constexpr int kPair10 = 2;   // {-1,0}

struct Signature {
  bool atom;
  std::size_t factor_count;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const WindowUniverse& u) {
  std::vector<Signature> out;
  out.reserve(u.size());
  for (const ZeroSet& x : u.elements()) {
    const std::size_t count = factorizations(x).size();
    out.push_back({!x.is_identity() && count == 0, count});
  }
  return out;
}

std::optional<AffineMinMaxParams> params_of(const WindowUniverse& u, int img01, int img10) {
  if (img01 < 0 || img10 < 0) return std::nullopt;
  try {
    return params_from_images(u.element(img01), u.element(img10));
  } catch (const std::invalid_argument&) {
    return AffineMinMaxParams{};  // a + b = 0: never consistent
  }
}

bool bounds_match(const WindowUniverse& u, const AffineMinMaxParams& p, int x, int y) {
  if (p == AffineMinMaxParams{}) return false;
  const ZeroSet& ex = u.element(x);
  return predict_bounds(p, -ex.min(), ex.max()) == bounds(u.element(y));
}

// Counts survivors and keeps the `limit` lexicographically smallest.
class Sink {
 public:
  Sink(std::size_t limit, const WindowMap& negation) : limit_(limit), negation_(negation) {}

  void add(const WindowMap& m) {
    ++count_;
    if (!has_identity_) {
      has_identity_ = true;
      for (std::size_t i = 0; i < m.size() && has_identity_; ++i) {
        has_identity_ = m[i] == static_cast<int>(i);
      }
    }
    has_negation_ = has_negation_ || m == negation_;
    if (limit_ == 0) return;
    if (heap_.size() < limit_) {
      heap_.push(m);
    } else if (m < heap_.top()) {
      heap_.pop();
      heap_.push(m);
    }
  }

  void merge_into(SearchResult& r) {
    r.survivors += count_;
    r.has_identity = r.has_identity || has_identity_;
    r.has_negation = r.has_negation || has_negation_;
    while (!heap_.empty()) {
      r.maps.push_back(heap_.top());
      heap_.pop();
    }
  }

 private:
  std::size_t limit_;
  const WindowMap& negation_;
  std::uint64_t count_ = 0;
  bool has_identity_ = false;
  bool has_negation_ = false;
  std::priority_queue<WindowMap> heap_;
};

class Searcher {
 public:
  Searcher(const WindowUniverse& u, bool prune, const std::vector<Signature>* sig)
      : u_(u), n_(static_cast<int>(u.size())), prune_(prune), sig_(sig),
        img_(n_, -1), pre_(n_, -1) {
    order_.resize(n_);
    for (int i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return u_.element(a).size() < u_.element(b).size();
    });
  }

  // Explores the subtree where the first open element takes images from
  // `first_choices` (all images when empty).
  void run(const std::vector<int>& first_choices, Sink& sink) {
    sink_ = &sink;
    dfs(0, &first_choices);
  }

 private:
  bool compatible(int x, int y) const {
    if (!prune_) return true;
    if ((*sig_)[x] != (*sig_)[y]) return false;
    const auto p = params_of(u_, img_[kPair01], img_[kPair10]);
    return !p || bounds_match(u_, *p, x, y);
  }

  // Assigns f(x) = y and closes under the forced consequences
  // f(x + w) = f(x) + f(w). Returns false on conflict; the caller undoes.
  bool assign(int x0, int y0) {
    queue_.clear();
    queue_.emplace_back(x0, y0);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const auto [x, y] = queue_[qi];
      if (img_[x] == y) continue;
      if (img_[x] >= 0 || pre_[y] >= 0) return false;
      if (!compatible(x, y)) return false;
      img_[x] = y;
      pre_[y] = x;
      trail_.push_back(x);
      if (prune_ && (x == kPair01 || x == kPair10) && !recheck_bounds()) return false;
      for (int w : trail_) {
        const int z = u_.sum(x, w);
        if (z < 0) continue;
        const int t = u_.sum(y, img_[w]);
        if (t < 0) return false;
        queue_.emplace_back(z, t);
      }
    }
    return true;
  }

  bool recheck_bounds() const {
    const auto p = params_of(u_, img_[kPair01], img_[kPair10]);
    if (!p) return true;
    for (int w : trail_) {
      if (!bounds_match(u_, *p, w, img_[w])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      pre_[img_[x]] = -1;
      img_[x] = -1;
    }
  }

  void dfs(std::size_t pos, const std::vector<int>* choices) {
    while (pos < order_.size() && img_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      if (verify_window_map(u_, img_)) sink_->add(img_);
      return;
    }
    const int x = order_[pos];
    auto try_image = [&](int y) {
      if (pre_[y] >= 0) return;
      const std::size_t mark = trail_.size();
      if (assign(x, y)) dfs(pos + 1, nullptr);
      undo(mark);
    };
    if (choices != nullptr && !choices->empty()) {
      for (int y : *choices) try_image(y);
    } else {
      for (int y = 0; y < n_; ++y) try_image(y);
    }
  }

  const WindowUniverse& u_;
  int n_;
  bool prune_;
  const std::vector<Signature>* sig_;
  std::vector<int> img_;
  std::vector<int> pre_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> queue_;
  Sink* sink_ = nullptr;
};

}  // namespace

SearchResult search_window(const WindowUniverse& u, const SearchOptions& options) {
  std::vector<Signature> sig;
  if (options.prune) sig = signatures(u);
  const int n = static_cast<int>(u.size());
  const unsigned workers = std::max(1u, options.workers);
  const WindowMap negation = restriction_of(u, AutomorphismSpec::negation());

  SearchResult result;
  if (workers == 1) {
    Sink sink(options.max_maps, negation);
    Searcher(u, options.prune, &sig).run({}, sink);
    sink.merge_into(result);
  } else {
    // Partition the images of the first open element across workers.
    std::vector<std::vector<int>> shares(workers);
    for (int y = 0; y < n; ++y) shares[static_cast<unsigned>(y) % workers].push_back(y);
    std::vector<Sink> sinks(workers, Sink(options.max_maps, negation));
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        Searcher(u, options.prune, &sig).run(shares[w], sinks[w]);
      });
    }
    for (auto& t : threads) t.join();
    for (auto& sink : sinks) sink.merge_into(result);
  }
  std::sort(result.maps.begin(), result.maps.end());
  if (result.maps.size() > options.max_maps) result.maps.resize(options.max_maps);
  result.truncated = result.maps.size() < result.survivors;
  return result;
}

std::vector<WindowMap> find_window_maps(const WindowUniverse& u,
                                        const SearchOptions& options) {
  SearchOptions all = options;
  all.max_maps = std::numeric_limits<std::size_t>::max();
  return search_window(u, all).maps;
}

std::vector<AutomorphismSpec> find_window_automorphisms(const WindowUniverse& u,
                                                        const SearchOptions& options) {
  std::vector<AutomorphismSpec> out;
  for (const WindowMap& m : find_window_maps(u, options)) out.push_back(to_table(u, m));
  return out;
}

std::vector<WindowMap> window_maps_oracle(const WindowUniverse& u) {
  const auto sig = signatures(u);
  const int n = static_cast<int>(u.size());
  std::vector<WindowMap> out;
  for (int y01 = 0; y01 < n; ++y01) {
    for (int y10 = 0; y10 < n; ++y10) {
      if (y01 == y10) continue;
      const auto p = params_of(u, y01, y10);
      if (*p == AffineMinMaxParams{}) continue;
      std::vector<std::vector<int>> cands(n);
      bool empty = false;
      for (int x = 0; x < n && !empty; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == kPair01 && y != y01) continue;
          if (x == kPair10 && y != y10) continue;
          if (sig[x] == sig[y] && bounds_match(u, *p, x, y)) cands[x].push_back(y);
        }
        empty = cands[x].empty();
      }
      if (empty) continue;

      WindowMap images(n, -1);
      std::vector<bool> used(n, false);
      auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
          if (verify_window_map(u, images)) out.push_back(images);
          return;
        }
        for (int y : cands[x]) {
          if (used[y]) continue;
          used[y] = true;
          images[x] = y;
          self(self, x + 1);
          used[y] = false;
        }
      };
      rec(rec, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_window_map(const WindowUniverse& u, std::span<const int> images) {
  const std::size_t n = u.size();
  if (images.size() != n) throw std::invalid_argument("window map is not total");
  std::vector<bool> hit(n, false);
  for (int y : images) {
    if (y < 0 || static_cast<std::size_t>(y) >= n || hit[y]) {
      throw std::invalid_argument("window map is not a bijection");
    }
    hit[y] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int z = u.sum(i, j);
      if (z < 0) continue;
      if (u.sum(images[i], images[j]) != images[z]) return false;
    }
  }
  return true;
}

bool verify_window_map(const WindowUniverse& u, const AutomorphismSpec& table) {
  WindowMap images;
  try {
    images = restriction_of(u, table);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("window map is not total");
  }
  return verify_window_map(u, images);
}

AutomorphismSpec to_table(const WindowUniverse& u, std::span<const int> images) {
  AutomorphismSpec::Table table;
  for (std::size_t i = 0; i < images.size(); ++i) {
    table.emplace(u.element(i), u.element(static_cast<std::size_t>(images[i])));
  }
  return AutomorphismSpec::table(std::move(table));
}

WindowMap restriction_of(const WindowUniverse& u, const AutomorphismSpec& f) {
  WindowMap images(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto j = u.index_of(f.apply(u.element(i)));
    if (!j) throw std::out_of_range("image leaves the window");
    images[i] = static_cast<int>(*j);
  }
  return images;
}

std::vector<std::size_t> unconstrained_elements(const WindowUniverse& u) {
  const std::size_t n = u.size();
  std::vector<bool> is_sum(n, false);
  std::vector<bool> is_summand(n, false);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const int z = u.sum(i, j);
      if (z < 0) continue;
      is_summand[i] = true;
      is_sum[static_cast<std::size_t>(z)] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < n; ++i) {
    if (!is_sum[i] && !is_summand[i]) out.push_back(i);
  }
  return out;
}

}  // namespace powermonoid
