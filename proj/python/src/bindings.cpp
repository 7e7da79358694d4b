#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "powermonoid/autos.hpp"
#include "powermonoid/boxing.hpp"
#include "powermonoid/finset.hpp"
#include "powermonoid/literal.hpp"
#include "powermonoid/monoid.hpp"
#include "powermonoid/search.hpp"

namespace py = pybind11;
using namespace powermonoid;

namespace {

// Sets cross the boundary as sorted lists of ints.
using Values = std::vector<Int>;

FinSet to_set(const Values& v) { return FinSet::from_values(v); }
Values to_values(const FinSet& x) { return {x.begin(), x.end()}; }

py::dict report_dict(const VerificationReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["witness"] = c.witness;
    checks.append(d);
  }
  py::dict out;
  out["lemma"] = r.lemma;
  out["checks"] = checks;
  out["pass"] = r.all_pass();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computation in the reduced power monoid of the integers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse_set", [](const std::string& s) { return to_values(parse_set(s)); });
  m.def("format_set", [](const Values& v) { return to_string(to_set(v)); });
  m.def("sumset", [](const Values& x, const Values& y) {
    return to_values(sumset(to_set(x), to_set(y)));
  });
  m.def("sumset_naive", [](const Values& x, const Values& y) {
    return to_values(sumset_naive(to_set(x), to_set(y)));
  });
  m.def("kfold", [](const Values& x, std::uint64_t k) { return to_values(kfold(to_set(x), k)); });
  m.def("interval", [](Int lo, Int hi) { return to_values(FinSet::interval(lo, hi)); });
  m.def("bdim", [](const Values& x) { return bdim(to_set(x)); });
  m.def("runs", [](const Values& x) {
    std::vector<std::pair<Int, Int>> out;
    const RunProfile profile = runs(to_set(x));
    for (const Run& r : profile.runs()) out.emplace_back(r.lo, r.hi);
    return out;
  });
  m.def("is_atom", [](const Values& x) { return is_atom(ZeroSet(to_set(x))); });
  m.def("factorizations", [](const Values& x) {
    std::vector<std::pair<Values, Values>> out;
    for (const auto& f : factorizations(ZeroSet(to_set(x)))) {
      out.emplace_back(to_values(f.left), to_values(f.right));
    }
    return out;
  });
  m.def("apply", [](const std::string& name, const Values& x) {
    return to_values(parse_automorphism(name).apply(ZeroSet(to_set(x))));
  });
  m.def("verify", [](const std::string& target, std::uint64_t seed, std::size_t samples) {
    if (target == "lemma21") return report_dict(bound_transport_suite(seed, samples));
    if (target == "lemma22") return report_dict(unit_image_suite());
    if (target == "lemma23") return report_dict(fixed_point_suite(seed, samples));
    if (target == "sigma0") return report_dict(max_reflection_suite(seed, samples));
    throw py::value_error("unknown verification target '" + target + "'");
  }, py::arg("target"), py::arg("seed") = 0, py::arg("samples") = 500);
  m.def("search_window", [](int half_width, bool prune, unsigned workers) {
    const WindowUniverse u(half_width);
    SearchOptions options;
    options.prune = prune;
    options.workers = workers;
    options.max_maps = 0;
    const SearchResult r = search_window(u, options);
    py::dict out;
    out["survivors"] = r.survivors;
    out["has_identity"] = r.has_identity;
    out["has_negation"] = r.has_negation;
    return out;
  }, py::arg("m"), py::arg("prune") = true, py::arg("workers") = 1);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs one CLI command in-process; returns (exit_code, stdout, stderr).");
}
