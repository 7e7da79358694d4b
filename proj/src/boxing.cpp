#include "powermonoid/boxing.hpp"

#include <stdexcept>
#include <string>

namespace powermonoid {

RunProfile::RunProfile(std::vector<Run> runs) : runs_(std::move(runs)) {
  if (runs_.empty()) throw std::invalid_argument("run profile must be nonempty");
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].lo > runs_[i].hi) {
      throw std::invalid_argument("run " + std::to_string(i) + " has lo > hi");
    }
    if (i > 0 && (runs_[i].lo <= runs_[i - 1].hi ||
                  static_cast<std::uint64_t>(runs_[i].lo) -
                          static_cast<std::uint64_t>(runs_[i - 1].hi) ==
                      1)) {
      throw std::invalid_argument("runs " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " overlap or touch");
    }
  }
}

std::vector<Int> RunProfile::endpoints() const {
  std::vector<Int> out;
  out.reserve(2 * runs_.size());
  for (const Run& r : runs_) {
    out.push_back(r.lo);
    out.push_back(r.hi);
  }
  return out;
}

RunProfile runs(const FinSet& x) {
  std::vector<Run> out;
  const auto& v = x.values();
  Int lo = v.front();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[i - 1] + 1) {
      out.push_back({lo, v[i - 1]});
      lo = v[i];
    }
  }
  out.push_back({lo, v.back()});
  return RunProfile(std::move(out));
}

std::size_t bdim(const FinSet& x) {
  std::size_t count = 1;
  const auto& v = x.values();
  for (std::size_t i = 1; i < v.size(); ++i) count += v[i] != v[i - 1] + 1;
  return count;
}

FinSet from_runs(const RunProfile& profile) {
  std::vector<Int> out;
  for (const Run& r : profile.runs()) {
    if (static_cast<std::uint64_t>(r.hi) - static_cast<std::uint64_t>(r.lo) >=
        kMaxDenseSpan) {
      throw std::length_error("run too wide to materialize");
    }
    for (Int v = r.lo;; ++v) {
      out.push_back(v);
      if (v == r.hi) break;
    }
  }
  return FinSet::from_sorted_unique(std::move(out));
}

}  // namespace powermonoid
