#include "powermonoid/proofsteps.hpp"

#include <algorithm>
#include <stdexcept>

#include "powermonoid/boxing.hpp"
#include "powermonoid/literal.hpp"

namespace powermonoid {

std::string to_string(DivergenceCase c) {
  switch (c) {
    case DivergenceCase::kNone:
      return "NoDivergence";
    case DivergenceCase::kRunStart:
      return "CaseI";
    case DivergenceCase::kRunEnd:
      return "CaseII";
  }
  return "?";
}

bool DivergenceWitness::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

Divergence first_divergence(const ZeroSet& a, const ZeroSet& b) {
  if (bounds(a) != bounds(b)) {
    throw std::invalid_argument("not a bound-consistent pair: min/max of A and B differ");
  }
  if (!(a.min() < 0 && 0 < a.max())) {
    throw std::invalid_argument("pair must satisfy min A < 0 < max A");
  }
  const auto ea = runs(a).endpoints();
  const auto eb = runs(b).endpoints();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i] != eb[i]) {
      return {i, i % 2 == 0 ? DivergenceCase::kRunStart : DivergenceCase::kRunEnd};
    }
  }
  // Equal prefixes ending at the shared maximum force equal profiles.
  if (ea.size() != eb.size()) throw std::logic_error("inconsistent run profiles");
  return {};
}

namespace {

FinSet union_of(std::vector<Run> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Run& x, const Run& y) { return x.lo < y.lo; });
  std::vector<Int> out;
  for (const Run& r : intervals) {
    Int v = r.lo;
    if (!out.empty() && out.back() >= v) v = out.back() + 1;
    for (; v <= r.hi; ++v) out.push_back(v);
  }
  return FinSet::from_sorted_unique(std::move(out));
}

std::string membership(Int point, const FinSet& set, bool expect_in) {
  return std::to_string(point) + (expect_in ? " in " : " not in ") + to_string(set);
}

}  // namespace

DivergenceWitness run_start_witness(const ZeroSet& a, const ZeroSet& b) {
  const Divergence div = first_divergence(a, b);
  if (div.kind != DivergenceCase::kRunStart) {
    throw std::invalid_argument("pair does not diverge at a run start (got " +
                                to_string(div.kind) + ")");
  }
  const auto ea = runs(a).endpoints();
  const auto eb = runs(b).endpoints();
  const std::size_t v = *div.index;
  const std::size_t u = v / 2;
  if (ea[v] > eb[v]) {
    throw std::invalid_argument("orientation: a_2u > b_2u; swap A and B");
  }
  const std::size_t r = ea.size() / 2 - 1;
  const Int d = ea[v] - ea[v - 1] - 1;

  DivergenceWitness w;
  w.kind = DivergenceCase::kRunStart;
  w.index = v;
  w.run = u;
  w.helper_set = FinSet::interval(0, d);
  w.lhs = a.set() + w.helper_set;
  w.rhs = b.set() + w.helper_set;
  w.witness_point = ea[v];

  // A + [[0,d]]: runs u-1 and u merge, every other run widens by d.
  std::vector<Run> expected_lhs;
  for (std::size_t i = 0; i <= r; ++i) {
    if (i == u - 1 || i == u) continue;
    expected_lhs.push_back({ea[2 * i], ea[2 * i + 1] + d});
  }
  expected_lhs.push_back({ea[2 * u - 2], ea[2 * u + 1] + d});
  std::vector<Run> expected_rhs;
  for (std::size_t j = 0; j < eb.size() / 2; ++j) {
    expected_rhs.push_back({eb[2 * j], eb[2 * j + 1] + d});
  }

  w.checks.push_back({"lhs-runs", w.lhs == union_of(expected_lhs), to_string(w.lhs)});
  w.checks.push_back({"rhs-runs", w.rhs == union_of(expected_rhs), to_string(w.rhs)});
  w.checks.push_back({"witness-in-lhs", w.lhs.contains(w.witness_point),
                      membership(w.witness_point, w.lhs, true)});
  w.checks.push_back({"witness-not-in-rhs", !w.rhs.contains(w.witness_point),
                      membership(w.witness_point, w.rhs, false)});
  const std::size_t lhs_dim = bdim(w.lhs);
  w.checks.push_back({"bdim-drop", lhs_dim <= r,
                      "bdim(lhs)=" + std::to_string(lhs_dim) + " r=" + std::to_string(r)});
  return w;
}

DivergenceWitness run_end_witness(const ZeroSet& a, const ZeroSet& b,
                                  std::optional<Int> c) {
  const Divergence div = first_divergence(a, b);
  if (div.kind != DivergenceCase::kRunEnd) {
    throw std::invalid_argument("pair does not diverge at a run end (got " +
                                to_string(div.kind) + ")");
  }
  const auto ea = runs(a).endpoints();
  const auto eb = runs(b).endpoints();
  const std::size_t v = *div.index;
  const std::size_t u = (v - 1) / 2;
  const std::size_t r = ea.size() / 2 - 1;
  const std::size_t s = eb.size() / 2 - 1;
  if (u == 0) {
    throw std::invalid_argument(
        "divergence at the end of the first run (u = 0) is not covered by the "
        "run-end step; flagged for manual review");
  }
  if (u + 1 > r) {
    throw std::invalid_argument("divergence at the final run (u = r) is outside the "
                                "run-end step (requires 1 <= u <= r-1)");
  }
  if (ea[v] < eb[v]) {
    throw std::invalid_argument("orientation: a_2u+1 < b_2u+1; swap A and B");
  }
  const Int amin = a.min();
  const Int amax = a.max();
  const Int c0 = checked_add(checked_sub(ea[v], amin),
                             std::max(checked_sub(ea[2 * r], ea[1]),
                                      checked_sub(eb[2 * s], eb[1])));
  const Int cval = c.value_or(c0);
  if (cval < c0) {
    throw std::invalid_argument("c below c0 (c=" + std::to_string(cval) +
                                ", c0=" + std::to_string(c0) + ")");
  }

  DivergenceWitness w;
  w.kind = DivergenceCase::kRunEnd;
  w.index = v;
  w.run = u;
  w.c = cval;
  w.c0 = c0;
  w.shift_interval = FinSet::interval(checked_add(ea[v] - amin, 1), cval);
  w.helper_set = set_union(FinSet::zero(), *w.shift_interval);
  w.shifted_lhs = a.set() + *w.shift_interval;
  w.shifted_rhs = b.set() + *w.shift_interval;
  w.lhs = a.set() + w.helper_set;
  w.rhs = b.set() + w.helper_set;
  w.h = std::min(eb[2 * s], ea[v] + 1);
  w.witness_point = eb[v] + 1;

  const Int top = checked_add(amax, cval);
  const FinSet collapsed = FinSet::interval(ea[v] + 1, top);
  w.checks.push_back({"A+C-interval", *w.shifted_lhs == collapsed, to_string(*w.shifted_lhs)});
  w.checks.push_back({"B+C-interval", *w.shifted_rhs == collapsed, to_string(*w.shifted_rhs)});

  std::vector<Run> expected_lhs;
  for (std::size_t j = 0; j < u; ++j) expected_lhs.push_back({ea[2 * j], ea[2 * j + 1]});
  expected_lhs.push_back({ea[2 * u], top});
  std::vector<Run> expected_rhs;
  for (std::size_t j = 0; j < s; ++j) expected_rhs.push_back({eb[2 * j], eb[2 * j + 1]});
  expected_rhs.push_back({*w.h, top});
  w.checks.push_back({"A+D-runs", w.lhs == union_of(expected_lhs), to_string(w.lhs)});
  w.checks.push_back({"B+D-runs", w.rhs == union_of(expected_rhs), to_string(w.rhs)});

  w.checks.push_back({"witness-in-lhs", w.lhs.contains(w.witness_point),
                      membership(w.witness_point, w.lhs, true)});
  w.checks.push_back({"witness-not-in-rhs", !w.rhs.contains(w.witness_point),
                      membership(w.witness_point, w.rhs, false)});
  const std::size_t lhs_dim = bdim(w.lhs);
  w.checks.push_back({"bdim-drop", lhs_dim == u + 1 && lhs_dim <= r,
                      "bdim(lhs)=" + std::to_string(lhs_dim) + " r=" + std::to_string(r)});
  return w;
}

std::size_t induction_measure(const ZeroSet& a, const ZeroSet& b) {
  return bdim(a) + bdim(b);
}

namespace {

// Random set with `count` runs, recentred so that 0 is an interior element.
std::optional<ZeroSet> random_profile_set(Rng& rng, std::size_t count) {
  std::vector<Int> v;
  Int pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Int hi = pos + uniform_int(rng, 0, 3);
    for (Int x = pos; x <= hi; ++x) v.push_back(x);
    pos = hi + uniform_int(rng, 2, 5);
  }
  if (v.size() < 3) return std::nullopt;
  const Int pivot = v[static_cast<std::size_t>(
      uniform_int(rng, 1, static_cast<Int>(v.size()) - 2))];
  for (Int& x : v) x -= pivot;
  return ZeroSet(FinSet::from_sorted_unique(std::move(v)));
}

// Moves endpoint `index` of A's profile to `value`; nullopt if 0 drops out.
std::optional<ZeroSet> move_endpoint(const ZeroSet& a, std::size_t index, Int value) {
  std::vector<Run> rs = runs(a).runs();
  (index % 2 == 0 ? rs[index / 2].lo : rs[index / 2].hi) = value;
  const FinSet moved = from_runs(RunProfile(std::move(rs)));
  if (!moved.contains(0)) return std::nullopt;
  return ZeroSet(moved);
}

Int pick_excluding(Rng& rng, Int lo, Int hi, Int skip) {
  Int x = uniform_int(rng, lo, hi - 1);
  return x >= skip ? x + 1 : x;
}

}  // namespace

std::pair<ZeroSet, ZeroSet> random_run_start_instance(Rng& rng) {
  while (true) {
    const auto a = random_profile_set(rng, static_cast<std::size_t>(uniform_int(rng, 2, 6)));
    if (!a) continue;
    const auto e = runs(*a).endpoints();
    const std::size_t r = e.size() / 2 - 1;
    const auto u = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<Int>(r)));
    const Int lo = e[2 * u - 1] + 2;
    const Int hi = e[2 * u + 1];
    if (lo == hi) continue;
    const Int moved = pick_excluding(rng, lo, hi, e[2 * u]);
    const auto b = move_endpoint(*a, 2 * u, moved);
    if (!b) continue;
    if (e[2 * u] > moved) return {*b, *a};
    return {*a, *b};
  }
}

std::pair<ZeroSet, ZeroSet> random_run_end_instance(Rng& rng) {
  while (true) {
    const auto a = random_profile_set(rng, static_cast<std::size_t>(uniform_int(rng, 3, 6)));
    if (!a) continue;
    const auto e = runs(*a).endpoints();
    const std::size_t r = e.size() / 2 - 1;
    const auto u = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<Int>(r) - 1));
    const Int lo = e[2 * u];
    const Int hi = e[2 * u + 2] - 2;
    if (lo == hi) continue;
    const Int moved = pick_excluding(rng, lo, hi, e[2 * u + 1]);
    const auto b = move_endpoint(*a, 2 * u + 1, moved);
    if (!b) continue;
    if (e[2 * u + 1] < moved) return {*b, *a};
    return {*a, *b};
  }
}

VerificationReport theorem_step_suite(int which_case, std::uint64_t seed,
                                      std::size_t samples) {
  if (which_case != 1 && which_case != 2) {
    throw std::invalid_argument("case must be 1 or 2");
  }
  VerificationReport report{"theorem", {}};
  Rng rng(seed);
  std::size_t ok = 0;
  std::string failure;
  auto fail = [&](const ZeroSet& a, const ZeroSet& b, const std::string& why) {
    if (failure.empty()) failure = "A=" + to_string(a) + " B=" + to_string(b) + ": " + why;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    if (which_case == 1) {
      const auto [a, b] = random_run_start_instance(rng);
      const auto w = run_start_witness(a, b);
      const bool drop = bdim(w.lhs) + bdim(w.rhs) + 1 <= induction_measure(a, b);
      if (w.passed() && drop) ++ok;
      else fail(a, b, drop ? "witness check failed" : "measure did not drop");
    } else {
      const auto [a, b] = random_run_end_instance(rng);
      const auto w0 = run_end_witness(a, b);
      const auto w1 = run_end_witness(a, b, *w0.c0 + 10);
      if (w0.passed() && w1.passed() && w0.witness_point == w1.witness_point) ++ok;
      else fail(a, b, "witness check failed");
    }
  }
  report.add(which_case == 1 ? "run-start-random" : "run-end-random", ok == samples,
             failure.empty() ? std::to_string(ok) + "/" + std::to_string(samples) : failure);
  return report;
}

}  // namespace powermonoid
