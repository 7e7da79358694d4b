#ifndef POWERMONOID_RANDOM_HPP
#define POWERMONOID_RANDOM_HPP

#include <cstdint>
#include <random>

#include "powermonoid/finset.hpp"
#include "powermonoid/monoid.hpp"

namespace powermonoid {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
Int uniform_int(Rng& rng, Int lo, Int hi);

// Random nonempty subset of [[lo, hi]] with a per-call random density.
FinSet random_set(Rng& rng, Int lo, Int hi);

// Random subset of [[lo, hi]] containing 0. Requires lo <= 0 <= hi.
ZeroSet random_zero_set(Rng& rng, Int lo, Int hi);

}  // namespace powermonoid

#endif  // POWERMONOID_RANDOM_HPP
