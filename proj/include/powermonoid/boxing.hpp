#ifndef POWERMONOID_BOXING_HPP
#define POWERMONOID_BOXING_HPP

#include <cstddef>
#include <vector>

#include "powermonoid/finset.hpp"

namespace powermonoid {

struct Run {
  Int lo;
  Int hi;
  friend bool operator==(const Run&, const Run&) = default;
};

// Maximal-run decomposition of a finite set, left to right. Consecutive runs
// are separated by at least one missing integer (next.lo >= prev.hi + 2).
class RunProfile {
 public:
  // Validates lo <= hi per run and the gap condition. Throws
  // std::invalid_argument on empty, overlapping or touching runs.
  explicit RunProfile(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t size() const { return runs_.size(); }
  const Run& operator[](std::size_t i) const { return runs_[i]; }

  // lo0, hi0, lo1, hi1, ...  i.e. the endpoint sequence a_0 .. a_{2r+1}.
  std::vector<Int> endpoints() const;

  friend bool operator==(const RunProfile&, const RunProfile&) = default;

 private:
  std::vector<Run> runs_;
};

RunProfile runs(const FinSet& x);

// Boxing dimension: the minimal number of discrete intervals covering X.
std::size_t bdim(const FinSet& x);

FinSet from_runs(const RunProfile& profile);

}  // namespace powermonoid

#endif  // POWERMONOID_BOXING_HPP
