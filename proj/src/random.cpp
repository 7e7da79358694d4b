#include "powermonoid/random.hpp"

#include <stdexcept>
#include <vector>

namespace powermonoid {

Int uniform_int(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

FinSet random_set(Rng& rng, Int lo, Int hi) {
  if (lo > hi) throw std::invalid_argument("random_set: lo > hi");
  const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution keep(density);
  std::vector<Int> v;
  for (Int x = lo;; ++x) {
    if (keep(rng)) v.push_back(x);
    if (x == hi) break;
  }
  if (v.empty()) v.push_back(uniform_int(rng, lo, hi));
  return FinSet::from_values(std::move(v));
}

ZeroSet random_zero_set(Rng& rng, Int lo, Int hi) {
  if (lo > 0 || hi < 0) throw std::invalid_argument("random_zero_set: need lo <= 0 <= hi");
  std::vector<Int> v = random_set(rng, lo, hi).values();
  v.push_back(0);
  return ZeroSet(FinSet::from_values(std::move(v)));
}

}  // namespace powermonoid
