#ifndef POWERMONOID_PROOFSTEPS_HPP
#define POWERMONOID_PROOFSTEPS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powermonoid/finset.hpp"
#include "powermonoid/monoid.hpp"
#include "powermonoid/random.hpp"
#include "powermonoid/report.hpp"

namespace powermonoid {

// Where the run-endpoint sequences a_0, a_1, ... of A and b_0, b_1, ... of B
// first disagree. An even index is a run start, an odd index a run end.
enum class DivergenceCase { kNone, kRunStart, kRunEnd };

// "CaseI", "CaseII" or "NoDivergence".
std::string to_string(DivergenceCase c);

struct Divergence {
  std::optional<std::size_t> index;
  DivergenceCase kind = DivergenceCase::kNone;
};

// Requires min A = min B and max A = max B with min A < 0 < max A; throws
// std::invalid_argument otherwise.
Divergence first_divergence(const ZeroSet& a, const ZeroSet& b);

// The concrete sets that refute A + H = B + H for a helper set H.
struct DivergenceWitness {
  DivergenceCase kind = DivergenceCase::kNone;
  std::size_t index = 0;   // v
  std::size_t run = 0;     // u
  FinSet helper_set = FinSet::zero();
  Int witness_point = 0;
  FinSet lhs = FinSet::zero();  // A + helper
  FinSet rhs = FinSet::zero();  // B + helper
  // Run-end case only.
  std::optional<Int> c;
  std::optional<Int> c0;
  std::optional<Int> h;
  std::optional<FinSet> shift_interval;  // C; helper_set is {0} u C
  std::optional<FinSet> shifted_lhs;     // A + C
  std::optional<FinSet> shifted_rhs;     // B + C
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Divergence at a run start a_{2u} < b_{2u}. Helper set [[0, d]] with
// d = a_{2u} - a_{2u-1} - 1; witness a_{2u}. Throws std::invalid_argument if
// the pair does not diverge at a run start or is oriented the other way.
DivergenceWitness run_start_witness(const ZeroSet& a, const ZeroSet& b);

// Divergence at the end of an interior run, a_{2u+1} > b_{2u+1} with
// 1 <= u <= r-1. Helper set {0} u [[-min A + a_{2u+1} + 1, c]], c >= c0
// (c defaults to c0); witness b_{2u+1} + 1.
DivergenceWitness run_end_witness(const ZeroSet& a, const ZeroSet& b,
                                  std::optional<Int> c = std::nullopt);

// bdim(A) + bdim(B).
std::size_t induction_measure(const ZeroSet& a, const ZeroSet& b);

// Random pairs with equal bounds diverging first at a run start (resp. the
// end of an interior run), oriented for the witness functions.
std::pair<ZeroSet, ZeroSet> random_run_start_instance(Rng& rng);
std::pair<ZeroSet, ZeroSet> random_run_end_instance(Rng& rng);

// Builds `samples` random instances of the given case (1 = run start,
// 2 = run end) and checks every witness. Run-end instances are checked with
// c = c0 and c = c0 + 10.
VerificationReport theorem_step_suite(int which_case, std::uint64_t seed,
                                      std::size_t samples);

}  // namespace powermonoid

#endif  // POWERMONOID_PROOFSTEPS_HPP
