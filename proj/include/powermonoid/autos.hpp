#ifndef POWERMONOID_AUTOS_HPP
#define POWERMONOID_AUTOS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powermonoid/finset.hpp"
#include "powermonoid/monoid.hpp"
#include "powermonoid/report.hpp"

namespace powermonoid {

// Extremes of the images of {0,1} and {-1,0} under a candidate automorphism:
//   min f({0,1}) = -a,  max f({0,1}) = b,
//   min f({-1,0}) = -c, max f({-1,0}) = d.
struct AffineMinMaxParams {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  Int d = 0;
  friend bool operator==(const AffineMinMaxParams&, const AffineMinMaxParams&) = default;
};

// A named endo/automorphism of the reduced monoid.
class AutomorphismSpec {
 public:
  enum class Kind { kIdentity, kNegation, kMaxReflection, kReversal, kTable };
  using Table = std::map<ZeroSet, ZeroSet>;

  static AutomorphismSpec identity();
  static AutomorphismSpec negation();
  // X -> max X - X.
  static AutomorphismSpec max_reflection();
  // X -> inner(-X), i.e. negation applied first and `inner` second.
  static AutomorphismSpec reversal(AutomorphismSpec inner);
  // Throws std::invalid_argument if the table is not injective.
  static AutomorphismSpec table(Table map);

  Kind kind() const { return kind_; }
  const AutomorphismSpec& inner() const { return *inner_; }
  const Table& entries() const { return table_; }

  // Throws std::out_of_range("image undefined") on a table miss.
  ZeroSet apply(const ZeroSet& x) const;
  std::string name() const;

 private:
  explicit AutomorphismSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const AutomorphismSpec> inner_;
  Table table_;
};

// Parses identity | negation | sigma0 | max-reflection | reversal:<name>.
AutomorphismSpec parse_automorphism(const std::string& name);

// Throws std::invalid_argument("not a valid image pair") unless a, b, c, d
// are nonnegative with a + b > 0 and c + d > 0.
AffineMinMaxParams params_from_images(const ZeroSet& image_of_01,
                                      const ZeroSet& image_of_neg10);

// (-c x_- - a x_+, d x_- + b x_+).
Bounds predict_bounds(const AffineMinMaxParams& p, Int x_minus, Int x_plus);

// Evaluates X + k[[-1,0]] + k[[0,1]] and (k + x_-)[[-1,0]] + (k + x_+)[[0,1]]
// and compares them. Requires k >= max(-min X, max X).
bool check_bound_transport_identity(const ZeroSet& x, std::uint64_t k);

// Solutions (a, b, c, d, x_-, x_+) in [0, bound]^6 of
//   c x_- + a x_+ = 0,  d x_- + b x_+ = 1
// with a + b > 0, c + d > 0, x_- + x_+ > 0.
using UnitImageSolution = std::array<Int, 6>;
std::vector<UnitImageSolution> solve_unit_image_system(Int bound);
// Distinct (x_-, x_+) pairs among the solutions, sorted.
std::vector<std::pair<Int, Int>> preimage_bounds(
    const std::vector<UnitImageSolution>& solutions);

// Index of the first pair violating f(X+Y) = f(X) + f(Y), if any.
std::optional<std::size_t> find_homomorphism_violation(
    const AutomorphismSpec& f, const std::vector<std::pair<ZeroSet, ZeroSet>>& pairs);
bool verify_homomorphism(const AutomorphismSpec& f,
                         const std::vector<std::pair<ZeroSet, ZeroSet>>& pairs);

// Randomized and exhaustive check suites. Reports carry one entry per named
// check; failures are reported, never thrown.
VerificationReport bound_transport_suite(std::uint64_t seed, std::size_t samples);
VerificationReport unit_image_suite(Int bound = 10);
VerificationReport fixed_point_suite(std::uint64_t seed, std::size_t samples);
VerificationReport max_reflection_suite(std::uint64_t seed, std::size_t samples);

}  // namespace powermonoid

#endif  // POWERMONOID_AUTOS_HPP
