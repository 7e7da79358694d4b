#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <stdexcept>

#include "powermonoid/autos.hpp"
#include "powermonoid/boxing.hpp"
#include "powermonoid/finset.hpp"
#include "powermonoid/literal.hpp"
#include "powermonoid/monoid.hpp"
#include "powermonoid/proofsteps.hpp"
#include "powermonoid/search.hpp"

namespace powermonoid::cli {
namespace {

using nlohmann::json;

// Empty format means "natural": single-value commands print the bare
// canonical value, structured commands print JSON.
enum class Format { kNatural, kJson, kPlain };

struct Config {
  Format format = Format::kNatural;
  std::uint64_t seed = 0;
  std::size_t samples = 500;
};

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return {{"lemma", report.lemma}, {"checks", checks}, {"pass", report.all_pass()}};
}

void print_report(std::ostream& out, const Config& cfg, const json& doc) {
  if (cfg.format != Format::kPlain) {
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& c : doc["checks"]) {
    out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
        << ' ' << c["witness"].get<std::string>() << '\n';
  }
}

int print_value(std::ostream& out, const Config& cfg, const std::string& op,
                const json& value, const std::string& bare) {
  if (cfg.format == Format::kJson) {
    out << json{{"op", op}, {"result", value}}.dump() << '\n';
  } else {
    out << bare << '\n';
  }
  return kExitOk;
}

json witness_json(const DivergenceWitness& w) {
  json checks = json::array();
  for (const auto& c : w.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  json doc{{"case", to_string(w.kind)},
           {"index", w.index},
           {"run", w.run},
           {"helper_set", to_string(w.helper_set)},
           {"lhs", to_string(w.lhs)},
           {"rhs", to_string(w.rhs)},
           {"witness_point", w.witness_point},
           {"checks", checks}};
  if (w.c) {
    doc["c"] = *w.c;
    doc["c0"] = *w.c0;
    doc["h"] = *w.h;
    doc["C"] = to_string(*w.shift_interval);
    doc["A+C"] = to_string(*w.shifted_lhs);
    doc["B+C"] = to_string(*w.shifted_rhs);
  }
  return doc;
}

int verify_theorem_pair(std::ostream& out, const Config& cfg, int which_case,
                        const std::string& a_text, const std::string& b_text,
                        std::optional<Int> c) {
  ZeroSet a(parse_set(a_text));
  ZeroSet b(parse_set(b_text));
  Divergence div = first_divergence(a, b);
  json doc{{"lemma", "theorem"}, {"A", to_string(a)}, {"B", to_string(b)},
           {"measure", induction_measure(a, b)}};
  if (div.kind == DivergenceCase::kNone) {
    doc["case"] = to_string(div.kind);
    doc["swapped"] = false;
    doc["checks"] = json::array(
        {{{"name", "no-divergence"}, {"pass", a == b}, {"witness", to_string(a)}}});
    doc["pass"] = a == b;
    print_report(out, cfg, doc);
    return kExitOk;
  }
  const int found = div.kind == DivergenceCase::kRunStart ? 1 : 2;
  if (which_case != 0 && which_case != found) {
    throw std::invalid_argument("pair diverges as " + to_string(div.kind) +
                                " at index " + std::to_string(*div.index) +
                                ", not case " + std::to_string(which_case));
  }
  // Orient so that A is ahead at the divergence, as with the inverse map.
  const auto ea = runs(a).endpoints();
  const auto eb = runs(b).endpoints();
  const std::size_t v = *div.index;
  const bool swap = found == 1 ? ea[v] > eb[v] : ea[v] < eb[v];
  if (swap) std::swap(a, b);
  const DivergenceWitness w =
      found == 1 ? run_start_witness(a, b) : run_end_witness(a, b, c);
  doc.update(witness_json(w));
  doc["swapped"] = swap;
  doc["oriented_A"] = to_string(a);
  doc["oriented_B"] = to_string(b);
  doc["pass"] = w.passed();
  print_report(out, cfg, doc);
  return w.passed() ? kExitOk : kExitCheckFailed;
}

json map_json(const WindowUniverse& u, const WindowMap& m) {
  json pairs = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    pairs.push_back({to_string(u.element(i)),
                     to_string(u.element(static_cast<std::size_t>(m[i])))});
  }
  return pairs;
}

int search_autos(std::ostream& out, const Config& cfg, int m, const std::string& prune,
                 bool oracle, std::size_t max_maps, unsigned workers) {
  const WindowUniverse u(m);
  SearchOptions options;
  options.prune = prune == "on";
  options.workers = workers;
  options.max_maps = max_maps;
  const SearchResult result = search_window(u, options);

  json maps = json::array();
  for (const auto& mp : result.maps) maps.push_back(map_json(u, mp));
  json free = json::array();
  for (std::size_t i : unconstrained_elements(u)) free.push_back(to_string(u.element(i)));
  json doc{{"m", m},
           {"elements", u.size()},
           {"prune", prune},
           {"survivors", result.survivors},
           {"has_identity", result.has_identity},
           {"has_negation", result.has_negation},
           {"maps_truncated", result.truncated},
           {"unconstrained", free},
           {"maps", maps}};
  bool ok = result.has_identity && result.has_negation;
  if (oracle) {
    const auto slow = window_maps_oracle(u);
    const bool match = result.truncated ? slow.size() == result.survivors
                                        : slow == result.maps;
    doc["oracle"] = {{"survivors", slow.size()}, {"match", match}};
    ok = ok && match;
  }

  if (cfg.format == Format::kPlain) {
    out << "m=" << m << " survivors=" << result.survivors
        << " identity=" << result.has_identity << " negation=" << result.has_negation;
    if (oracle) out << " oracle_match=" << doc["oracle"]["match"].get<bool>();
    out << '\n';
    for (const auto& mp : result.maps) {
      for (std::size_t i = 0; i < mp.size(); ++i) {
        if (mp[i] == static_cast<int>(i)) continue;
        out << to_string(u.element(i)) << "->" << to_string(u.element(mp[i])) << ' ';
      }
      out << '\n';
    }
  } else {
    out << doc.dump() << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in the reduced power monoid of the integers"};
  app.name("powermonoid");
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  Config cfg;
  app.add_option("--output", output, "json | plain")
      ->check(CLI::IsMember({"json", "plain"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");
  app.add_option("--samples", cfg.samples, "Sample count for randomized suites")
      ->check(CLI::PositiveNumber);

  std::string x_text, y_text, auto_name, verify_target, a_text, b_text, prune = "on";
  std::uint64_t k = 0;
  int which_case = 0;
  int window = 0;
  Int bound = 10;
  std::optional<Int> c;
  bool oracle = false;
  std::size_t max_maps = 16;
  unsigned workers = 1;

  auto* sum = app.add_subcommand("sum", "Sumset X + Y");
  sum->add_option("X", x_text)->required();
  sum->add_option("Y", y_text)->required();

  auto* kf = app.add_subcommand("kfold", "k-fold sum kX");
  kf->add_option("X", x_text)->required();
  kf->add_option("k", k)->required();

  auto* bd = app.add_subcommand("bdim", "Boxing dimension");
  bd->add_option("X", x_text)->required();

  auto* rn = app.add_subcommand("runs", "Maximal-run decomposition");
  rn->add_option("X", x_text)->required();

  auto* fac = app.add_subcommand("factor", "Nontrivial factorizations in the reduced monoid");
  fac->add_option("X", x_text)->required();

  auto* ap = app.add_subcommand("apply", "Apply identity|negation|sigma0|reversal:<f>");
  ap->add_option("auto", auto_name)->required();
  ap->add_option("X", x_text)->required();

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("target", verify_target, "lemma21 | lemma22 | lemma23 | sigma0 | theorem")
      ->required()
      ->check(CLI::IsMember({"lemma21", "lemma22", "lemma23", "sigma0", "theorem"}));
  ver->add_option("--case", which_case, "1 (run start) or 2 (run end)")
      ->check(CLI::IsMember({1, 2}));
  ver->add_option("--A", a_text, "Set A for a single theorem step");
  ver->add_option("--B", b_text, "Set B for a single theorem step");
  ver->add_option("--c", c, "Right end of the run-end helper interval (>= c0)");
  ver->add_option("--bound", bound, "Search bound for lemma22")->check(CLI::PositiveNumber);

  auto* sa = app.add_subcommand("search-autos", "Exhaustive window automorphism search");
  sa->add_option("--window", window, "Half-width m")->required();
  sa->add_option("--prune", prune, "on | off")->check(CLI::IsMember({"on", "off"}));
  sa->add_flag("--oracle", oracle, "Also run the unpruned oracle and diff");
  sa->add_option("--max-maps", max_maps, "Maps to print (smallest first)");
  sa->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (output == "json") cfg.format = Format::kJson;
  if (output == "plain") cfg.format = Format::kPlain;

  try {
    if (sum->parsed()) {
      const FinSet r = parse_set(x_text) + parse_set(y_text);
      return print_value(out, cfg, "sum", to_string(r), to_string(r));
    }
    if (kf->parsed()) {
      const FinSet r = kfold(parse_set(x_text), k);
      return print_value(out, cfg, "kfold", to_string(r), to_string(r));
    }
    if (bd->parsed()) {
      const std::size_t d = bdim(parse_set(x_text));
      return print_value(out, cfg, "bdim", d, std::to_string(d));
    }
    if (ap->parsed()) {
      const AutomorphismSpec f = parse_automorphism(auto_name);
      const ZeroSet r = f.apply(ZeroSet(parse_set(x_text)));
      return print_value(out, cfg, "apply", to_string(r), to_string(r));
    }
    if (rn->parsed()) {
      const RunProfile p = runs(parse_set(x_text));
      if (cfg.format == Format::kPlain) {
        for (const Run& r : p.runs()) out << '[' << r.lo << ',' << r.hi << "] ";
        out << '\n';
      } else {
        json arr = json::array();
        for (const Run& r : p.runs()) arr.push_back({r.lo, r.hi});
        out << arr.dump() << '\n';
      }
      return kExitOk;
    }
    if (fac->parsed()) {
      const ZeroSet x(parse_set(x_text));
      const auto fs = factorizations(x);
      if (cfg.format == Format::kPlain) {
        out << to_string(x) << (fs.empty() && !x.is_identity() ? " atom" : "") << '\n';
        for (const auto& f : fs) out << to_string(f.left) << " + " << to_string(f.right) << '\n';
      } else {
        json pairs = json::array();
        for (const auto& f : fs) pairs.push_back({to_string(f.left), to_string(f.right)});
        out << json{{"set", to_string(x)},
                    {"atom", !x.is_identity() && fs.empty()},
                    {"factorizations", pairs}}
                   .dump()
            << '\n';
      }
      return kExitOk;
    }
    if (ver->parsed()) {
      VerificationReport report;
      if (verify_target == "lemma21") {
        report = bound_transport_suite(cfg.seed, cfg.samples);
      } else if (verify_target == "lemma22") {
        report = unit_image_suite(bound);
      } else if (verify_target == "lemma23") {
        report = fixed_point_suite(cfg.seed, cfg.samples);
      } else if (verify_target == "sigma0") {
        report = max_reflection_suite(cfg.seed, cfg.samples);
      } else {
        if (!a_text.empty() || !b_text.empty()) {
          if (a_text.empty() || b_text.empty()) {
            throw std::invalid_argument("--A and --B must be given together");
          }
          return verify_theorem_pair(out, cfg, which_case, a_text, b_text, c);
        }
        report.lemma = "theorem";
        for (int which : {1, 2}) {
          if (which_case != 0 && which != which_case) continue;
          const auto part = theorem_step_suite(which, cfg.seed, cfg.samples);
          report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
        }
      }
      print_report(out, cfg, to_json(report));
      return report.all_pass() ? kExitOk : kExitCheckFailed;
    }
    if (sa->parsed()) {
      return search_autos(out, cfg, window, prune, oracle, max_maps, workers);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace powermonoid::cli
