#ifndef POWERMONOID_SEARCH_HPP
#define POWERMONOID_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "powermonoid/autos.hpp"
#include "powermonoid/monoid.hpp"

namespace powermonoid {

// All ZeroSets inside [[-m, m]] with the partial sum table restricted to
// pairs whose sum stays in the window.
//
// Element index i is a bitmask over the nonzero points: bit 2(t-1) stands for
// +t and bit 2(t-1)+1 for -t. For m = 1 this orders the elements as
// {0}, {0,1}, {-1,0}, {-1,0,1}.
class WindowUniverse {
 public:
  static constexpr int kMaxHalfWidth = 6;

  // Throws std::out_of_range unless 1 <= m <= kMaxHalfWidth.
  explicit WindowUniverse(int m);

  int half_width() const { return m_; }
  std::size_t size() const { return elements_.size(); }
  const ZeroSet& element(std::size_t i) const { return elements_[i]; }
  const std::vector<ZeroSet>& elements() const { return elements_; }

  // Index of X + Y, or -1 when the sum leaves the window.
  int sum(std::size_t i, std::size_t j) const {
    return sums_[i * elements_.size() + j];
  }
  std::optional<std::size_t> index_of(const FinSet& x) const;

  std::size_t in_window_pairs() const;

 private:
  int m_;
  std::vector<ZeroSet> elements_;
  std::vector<std::int16_t> sums_;
};

// images[i] is the index of f(element i).
using WindowMap = std::vector<int>;

struct SearchOptions {
  // Restrict candidate images by bound transport, atom status and
  // nontrivial-factorization count. Off: only the partial-homomorphism
  // constraints and bijectivity prune the tree.
  bool prune = true;
  unsigned workers = 1;
  // Only the lexicographically smallest `max_maps` survivors are kept; all
  // of them are counted.
  std::size_t max_maps = std::numeric_limits<std::size_t>::max();
};

struct SearchResult {
  std::uint64_t survivors = 0;
  std::vector<WindowMap> maps;
  bool truncated = false;
  bool has_identity = false;
  bool has_negation = false;
};

SearchResult search_window(const WindowUniverse& u, const SearchOptions& options = {});

// Every bijection f of the window with f(X+Y) = f(X) + f(Y) (the right side
// also inside the window) whenever X+Y is in the window. Sorted
// lexicographically by image vector; the identity comes first.
std::vector<WindowMap> find_window_maps(const WindowUniverse& u,
                                        const SearchOptions& options = {});
std::vector<AutomorphismSpec> find_window_automorphisms(const WindowUniverse& u,
                                                        const SearchOptions& options = {});

// Enumerates every injective assignment drawn from the invariant-compatible
// candidate lists, without any propagation, and keeps the ones passing the
// full table check. Exponential; intended for m <= 2.
std::vector<WindowMap> window_maps_oracle(const WindowUniverse& u);

// Throws std::invalid_argument if the map is not a bijection of the window.
bool verify_window_map(const WindowUniverse& u, std::span<const int> images);
bool verify_window_map(const WindowUniverse& u, const AutomorphismSpec& table);

AutomorphismSpec to_table(const WindowUniverse& u, std::span<const int> images);
WindowMap restriction_of(const WindowUniverse& u, const AutomorphismSpec& f);

// Elements that occur in no nontrivial in-window sum relation: X+Y leaves the
// window for every Y != {0}, and X is not the sum of two in-window
// nontrivial elements. Such elements are unconstrained by the table.
std::vector<std::size_t> unconstrained_elements(const WindowUniverse& u);

}  // namespace powermonoid

#endif  // POWERMONOID_SEARCH_HPP
