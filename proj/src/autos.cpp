#include "powermonoid/autos.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "powermonoid/literal.hpp"
#include "powermonoid/random.hpp"

namespace powermonoid {

AutomorphismSpec AutomorphismSpec::identity() { return AutomorphismSpec(Kind::kIdentity); }

AutomorphismSpec AutomorphismSpec::negation() { return AutomorphismSpec(Kind::kNegation); }

AutomorphismSpec AutomorphismSpec::max_reflection() {
  return AutomorphismSpec(Kind::kMaxReflection);
}

AutomorphismSpec AutomorphismSpec::reversal(AutomorphismSpec inner) {
  AutomorphismSpec spec(Kind::kReversal);
  spec.inner_ = std::make_shared<const AutomorphismSpec>(std::move(inner));
  return spec;
}

AutomorphismSpec AutomorphismSpec::table(Table map) {
  std::set<ZeroSet> images;
  for (const auto& [from, to] : map) {
    if (!images.insert(to).second) {
      throw std::invalid_argument("table is not injective: " + to_string(to) +
                                  " has two preimages");
    }
  }
  AutomorphismSpec spec(Kind::kTable);
  spec.table_ = std::move(map);
  return spec;
}

ZeroSet AutomorphismSpec::apply(const ZeroSet& x) const {
  switch (kind_) {
    case Kind::kIdentity:
      return x;
    case Kind::kNegation:
      return ZeroSet(negate(x));
    case Kind::kMaxReflection:
      return ZeroSet(reflect(x, x.max()));
    case Kind::kReversal:
      return inner_->apply(ZeroSet(negate(x)));
    case Kind::kTable: {
      auto it = table_.find(x);
      if (it == table_.end()) {
        throw std::out_of_range("image undefined for " + to_string(x));
      }
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

std::string AutomorphismSpec::name() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kNegation:
      return "negation";
    case Kind::kMaxReflection:
      return "sigma0";
    case Kind::kReversal:
      return "reversal:" + inner_->name();
    case Kind::kTable:
      return "table";
  }
  throw std::logic_error("unreachable");
}

AutomorphismSpec parse_automorphism(const std::string& name) {
  if (name == "identity") return AutomorphismSpec::identity();
  if (name == "negation") return AutomorphismSpec::negation();
  if (name == "sigma0" || name == "max-reflection") {
    return AutomorphismSpec::max_reflection();
  }
  const std::string prefix = "reversal:";
  if (name.rfind(prefix, 0) == 0) {
    return AutomorphismSpec::reversal(parse_automorphism(name.substr(prefix.size())));
  }
  throw std::invalid_argument("unknown automorphism '" + name + "'");
}

AffineMinMaxParams params_from_images(const ZeroSet& image_of_01,
                                      const ZeroSet& image_of_neg10) {
  // ZeroSets always have min <= 0 <= max, so the signs hold by construction.
  const AffineMinMaxParams p{-image_of_01.min(), image_of_01.max(),
                             -image_of_neg10.min(), image_of_neg10.max()};
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0 || p.a + p.b == 0 || p.c + p.d == 0) {
    throw std::invalid_argument("not a valid image pair");
  }
  return p;
}

Bounds predict_bounds(const AffineMinMaxParams& p, Int x_minus, Int x_plus) {
  const Int lo = checked_sub(-checked_mul(p.c, x_minus), checked_mul(p.a, x_plus));
  const Int hi = checked_add(checked_mul(p.d, x_minus), checked_mul(p.b, x_plus));
  return {lo, hi};
}

bool check_bound_transport_identity(const ZeroSet& x, std::uint64_t k) {
  const std::uint64_t x_minus = 0 - static_cast<std::uint64_t>(x.min());  // |min X|, no overflow
  const auto x_plus = static_cast<std::uint64_t>(x.max());
  if (k < std::max(x_minus, x_plus)) {
    throw std::invalid_argument("precondition k >= max(x_-, x_+) violated");
  }
  const FinSet down = FinSet::interval(-1, 0);
  const FinSet up = FinSet::interval(0, 1);
  const FinSet lhs = x.set() + kfold(down, k) + kfold(up, k);
  const FinSet rhs = kfold(down, k + x_minus) + kfold(up, k + x_plus);
  return lhs == rhs;
}

std::vector<UnitImageSolution> solve_unit_image_system(Int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<UnitImageSolution> out;
  for (Int a = 0; a <= bound; ++a)
    for (Int b = 0; b <= bound; ++b) {
      if (a + b == 0) continue;
      for (Int c = 0; c <= bound; ++c)
        for (Int d = 0; d <= bound; ++d) {
          if (c + d == 0) continue;
          for (Int xm = 0; xm <= bound; ++xm)
            for (Int xp = 0; xp <= bound; ++xp) {
              if (xm + xp == 0) continue;
              if (c * xm + a * xp == 0 && d * xm + b * xp == 1) {
                out.push_back({a, b, c, d, xm, xp});
              }
            }
        }
    }
  return out;
}

std::vector<std::pair<Int, Int>> preimage_bounds(
    const std::vector<UnitImageSolution>& solutions) {
  std::set<std::pair<Int, Int>> seen;
  for (const auto& s : solutions) seen.emplace(s[4], s[5]);
  return {seen.begin(), seen.end()};
}

std::optional<std::size_t> find_homomorphism_violation(
    const AutomorphismSpec& f, const std::vector<std::pair<ZeroSet, ZeroSet>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    if (f.apply(x + y) != f.apply(x) + f.apply(y)) return i;
  }
  return std::nullopt;
}

bool verify_homomorphism(const AutomorphismSpec& f,
                         const std::vector<std::pair<ZeroSet, ZeroSet>>& pairs) {
  return !find_homomorphism_violation(f, pairs).has_value();
}

namespace {

std::string count_witness(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

ZeroSet zs(std::initializer_list<Int> v) { return ZeroSet(FinSet::from_values(v)); }

}  // namespace

VerificationReport bound_transport_suite(std::uint64_t seed, std::size_t samples) {
  VerificationReport report{"lemma21", {}};
  Rng rng(seed);
  std::vector<ZeroSet> corpus;
  corpus.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) corpus.push_back(random_zero_set(rng, -20, 20));

  std::size_t ok = 0;
  std::string failure;
  for (const ZeroSet& x : corpus) {
    const auto k = static_cast<std::uint64_t>(std::max(-x.min(), x.max()));
    if (check_bound_transport_identity(x, k)) ++ok;
    else if (failure.empty()) failure = to_string(x);
  }
  report.add("proof-identity", ok == corpus.size(),
             failure.empty() ? count_witness(ok, corpus.size()) : failure);

  for (const auto& f : {AutomorphismSpec::identity(), AutomorphismSpec::negation()}) {
    const AffineMinMaxParams p =
        params_from_images(f.apply(zs({0, 1})), f.apply(zs({-1, 0})));
    ok = 0;
    failure.clear();
    for (const ZeroSet& x : corpus) {
      if (bounds(f.apply(x)) == predict_bounds(p, -x.min(), x.max())) ++ok;
      else if (failure.empty()) failure = to_string(x);
    }
    report.add("closed-formula-" + f.name(), ok == corpus.size(),
               failure.empty() ? count_witness(ok, corpus.size()) : failure);
  }
  return report;
}

VerificationReport unit_image_suite(Int bound) {
  VerificationReport report{"lemma22", {}};
  const auto solutions = solve_unit_image_system(bound);
  const auto projection = preimage_bounds(solutions);
  const std::vector<std::pair<Int, Int>> expected{{0, 1}, {1, 0}};
  std::string listed;
  for (const auto& [xm, xp] : projection) {
    listed += "(" + std::to_string(xm) + "," + std::to_string(xp) + ")";
  }
  report.add("projection", projection == expected, listed);

  bool minus_branch = true;
  bool plus_branch = true;
  for (const auto& s : solutions) {
    const auto [a, b, c, d, xm, xp] = s;
    if (xm == 1) minus_branch = minus_branch && d == 1 && c == 0 && xp == 0;
    if (xp == 1) plus_branch = plus_branch && b == 1 && a == 0 && xm == 0;
  }
  report.add("branch-x_minus", minus_branch, "d=1,c=0,x_plus=0");
  report.add("branch-x_plus", plus_branch, "b=1,a=0,x_minus=0");
  report.add("solution-count", !solutions.empty(), std::to_string(solutions.size()));
  return report;
}

VerificationReport fixed_point_suite(std::uint64_t seed, std::size_t samples) {
  VerificationReport report{"lemma23", {}};
  Rng rng(seed);

  {
    const AffineMinMaxParams p = params_from_images(zs({0, 1}), zs({-1, 0}));
    bool ok = p == AffineMinMaxParams{0, 1, 1, 0};
    for (std::size_t i = 0; i < samples && ok; ++i) {
      const ZeroSet x = random_zero_set(rng, -20, 20);
      ok = predict_bounds(p, -x.min(), x.max()) == bounds(x);
    }
    report.add("unit-images-fixed", ok, "(a,b,c,d)=(0,1,1,0)");
  }

  {
    const auto cands = candidates_with_bounds(-1, 2);
    const bool listed = cands == std::vector<ZeroSet>{zs({-1, 0, 2}), zs({-1, 0, 1, 2})};
    const bool atom = is_atom(zs({-1, 0, 2}));
    const bool not_atom = !is_atom(zs({-1, 0, 1, 2}));
    const bool split = zs({-1, 0}) + zs({0, 2}) == zs({-1, 0, 1, 2});
    std::string w;
    for (const auto& c : cands) w += to_string(c);
    report.add("atom-candidates", listed && atom && not_atom && split, w);
  }

  {
    bool ok = true;
    std::string failure;
    for (std::uint64_t k = 0; k <= 8 && ok; ++k) {
      for (std::uint64_t l = 0; l <= 8 && ok; ++l) {
        const FinSet gen =
            kfold(FinSet::interval(-1, 0), k) + kfold(FinSet::interval(0, 1), l);
        ok = gen == FinSet::interval(-static_cast<Int>(k), static_cast<Int>(l));
        if (!ok) failure = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
      }
    }
    report.add("interval-generation", ok, ok ? "0<=k,l<=8" : failure);
  }

  {
    const FinSet left = zs({-1, 0, 2}) + zs({0, 1, 3});
    const FinSet right = zs({-1, 0, 2}) + zs({0, 2, 3});
    const bool reflected =
        AutomorphismSpec::max_reflection().apply(zs({0, 2, 3})) == zs({0, 1, 3});
    const bool ok = left == FinSet::from_values({-1, 0, 1, 2, 3, 5}) &&
                    left != FinSet::interval(-1, 5) &&
                    right == FinSet::interval(-1, 5) && reflected;
    report.add("sum-contradiction", ok, to_string(left) + "!=" + to_string(right));
  }

  {
    std::vector<ZeroSet> corpus;
    AutomorphismSpec::Table table;
    for (std::size_t i = 0; i < samples; ++i) {
      corpus.push_back(random_zero_set(rng, 0, 20));
      const ZeroSet neg(negate(corpus.back()));
      table.emplace(neg, neg);
    }
    const auto conj = AutomorphismSpec::table(std::move(table));
    const auto neg = AutomorphismSpec::negation();
    bool ok = true;
    std::string failure;
    for (const ZeroSet& x : corpus) {
      if (neg.apply(conj.apply(neg.apply(x))) != x) {
        ok = false;
        failure = to_string(x);
        break;
      }
    }
    report.add("reversal-conjugation", ok, ok ? count_witness(corpus.size(), corpus.size()) : failure);
  }
  return report;
}

VerificationReport max_reflection_suite(std::uint64_t seed, std::size_t samples) {
  VerificationReport report{"sigma0", {}};
  Rng rng(seed);
  const auto reflect_max = AutomorphismSpec::max_reflection();

  std::vector<std::pair<ZeroSet, ZeroSet>> pairs;
  for (std::size_t i = 0; i < samples; ++i) {
    ZeroSet x = random_zero_set(rng, -10, 10);
    ZeroSet y = random_zero_set(rng, -10, 10);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  const auto bad = find_homomorphism_violation(reflect_max, pairs);
  report.add("additive", !bad.has_value(),
             bad ? to_string(pairs[*bad].first) + "+" + to_string(pairs[*bad].second)
                 : count_witness(pairs.size(), pairs.size()));

  bool involutive = true;
  std::string failure;
  for (std::size_t i = 0; i < samples && involutive; ++i) {
    const ZeroSet x = random_zero_set(rng, 0, 20);
    involutive = reflect_max.apply(reflect_max.apply(x)) == x;
    if (!involutive) failure = to_string(x);
  }
  report.add("involution-on-N", involutive,
             involutive ? count_witness(samples, samples) : failure);

  const ZeroSet w1 = reflect_max.apply(zs({-1, 0}));
  const ZeroSet w2 = reflect_max.apply(zs({0, 1}));
  report.add("not-injective-on-Z", w1 == w2 && w1 == zs({0, 1}),
             "{-1,0}->" + to_string(w1) + ",{0,1}->" + to_string(w2));
  return report;
}

}  // namespace powermonoid
