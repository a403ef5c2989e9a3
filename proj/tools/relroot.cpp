// relroot: root data, foldings, commutator maps, verification suites and
// finite group checks from the command line.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "relroot/chevalley.hpp"
#include "relroot/error.hpp"
#include "relroot/finitelab.hpp"
#include "relroot/folding.hpp"
#include "relroot/relcalc.hpp"
#include "relroot/report.hpp"
#include "relroot/suites.hpp"

using nlohmann::json;
using namespace relroot;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

json roots_json(const RootType& t) {
  auto rs = root_system(t);
  json roots = json::array();
  for (std::size_t i = 0; i < rs->size(); ++i)
    roots.push_back({{"index", i},
                     {"coords", rs->root(i)},
                     {"height", rs->height(i)},
                     {"norm", rs->norm(i)},
                     {"length", to_string(rs->length(i))}});
  return {{"type", t.name()}, {"rank", t.rank}, {"count", rs->size()}, {"cartan", rs->cartan()}, {"roots", roots}};
}

FoldingSpec make_spec(const std::string& type, const std::string& gamma, const std::string& levi) {
  RootType t = RootType::parse(type);
  return FoldingSpec(t, FoldingSpec::parse_gamma(t, gamma), FoldingSpec::parse_levi(t, levi));
}

json fold_json(const FoldingSpec& spec) {
  auto rs = root_system(spec.type);
  RelativeRootSystem rrs(rs, spec);
  json rel = json::array();
  for (std::size_t i = 0; i < rrs.size(); ++i) {
    json fiber = json::array();
    for (std::size_t r : rrs.fiber(i)) fiber.push_back(rs->root(r));
    rel.push_back({{"index", i},
                   {"coords", rrs.rel_root(i)},
                   {"level", rrs.level(i)},
                   {"sign", rrs.sign(i)},
                   {"component", rrs.component_of(i)},
                   {"fiber", fiber}});
  }
  json comps = json::array();
  for (int c = 0; c < rrs.num_components(); ++c) {
    json comp = {{"coords", rrs.component_coords(c)}, {"rank", rrs.component_rank(c)}};
    try {
      comp["type"] = classify_relative_type(rrs, c).name();
    } catch (const PreconditionError&) {
      comp["type"] = nullptr;
    }
    comps.push_back(comp);
  }
  json out = {{"spec", spec.to_string()}, {"rank", rrs.rank()}, {"orbits", rrs.orbits()},
              {"relativeRoots", rel}, {"components", comps}};
  if (rrs.num_components() == 1) out["type"] = comps[0]["type"];
  return out;
}

Coords parse_coords(const std::string& text) {
  Coords c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse coordinates: " + text);
    }
  }
  return c;
}

json nmap_json(const RelativeRootSystem& rrs, const NMapTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    json coords = json::array();
    for (const auto& p : e.coords) coords.push_back(p.to_string());
    entries.push_back({{"i", e.i}, {"j", e.j}, {"target", rrs.rel_root(e.target)}, {"coords", coords}});
  }
  return {{"A", rrs.rel_root(t.a)}, {"B", rrs.rel_root(t.b)}, {"verified", t.verified}, {"maps", entries}};
}

json nmaps_json(const FoldingSpec& spec, const std::string& a_text, const std::string& b_text, bool verify) {
  auto rs = root_system(spec.type);
  auto cb = chevalley_basis(spec.type);
  RelativeRootSystem rrs(rs, spec);
  auto lookup = [&](const std::string& text) {
    auto idx = rrs.index_of(parse_coords(text));
    if (!idx) throw InvalidArgument("not a relative root: " + text);
    return *idx;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!a_text.empty() && !b_text.empty()) {
    pairs.push_back({lookup(a_text), lookup(b_text)});
  } else if (a_text.empty() && b_text.empty()) {
    for (std::size_t a = 0; a < rrs.size(); ++a)
      for (std::size_t b = 0; b < rrs.size(); ++b)
        if (!opposite_collinear(rrs.rel_root(a), rrs.rel_root(b))) pairs.push_back({a, b});
  } else {
    throw InvalidArgument("--a and --b must be given together");
  }
  json tables = json::array();
  for (auto [a, b] : pairs) tables.push_back(nmap_json(rrs, compute_relative_commutator_maps(rrs, *cb, a, b, verify)));
  return {{"spec", spec.to_string()}, {"tables", tables}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write report file: " + path);
  out << text;
  if (!out) throw InvalidArgument("cannot write report file: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative root systems: root data, commutator maps and identity checks"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string type, gamma = "trivial", levi = "all";

  auto* roots = app.add_subcommand("roots", "List the roots of a type with heights and length classes");
  roots->add_option("--type", type, "Type such as G2 or C4")->required();

  auto* fold = app.add_subcommand("fold", "Relative root system of a folding");
  fold->add_option("--type", type, "Ambient type")->required();
  fold->add_option("--gamma", gamma, "trivial, flip, triality or perm:<images>")->capture_default_str();
  fold->add_option("--levi", levi, "1-based node list or all")->capture_default_str();

  std::string a_text, b_text;
  bool no_verify = false;
  auto* nmaps = app.add_subcommand("nmaps", "Commutator maps of relative root pairs");
  nmaps->add_option("--type", type, "Ambient type")->required();
  nmaps->add_option("--gamma", gamma, "Diagram automorphism group")->capture_default_str();
  nmaps->add_option("--levi", levi, "1-based node list or all")->capture_default_str();
  nmaps->add_option("--a", a_text, "First relative root, comma-separated coordinates");
  nmaps->add_option("--b", b_text, "Second relative root, comma-separated coordinates");
  nmaps->add_flag("--no-verify", no_verify, "Skip the full matrix comparison");

  std::string suite, report_path, eps_text;
  SuiteOptions opts;
  int max_rank = 0, k = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-rank", max_rank, "Rank bound for catalog suites");
  verify->add_option("--k", k, "Exponent for c2, g2 and cases");
  verify->add_option("--eps", eps_text, "symbolic or a rational value");
  verify->add_option("--report", report_path, "Write the JSON report to this file");
  verify->add_option("--seed", opts.seed, "Seed for random probes")->capture_default_str();
  verify->add_option("--jobs", opts.jobs, "Worker threads (0: hardware concurrency)")->capture_default_str();
  verify->add_flag("--timing", opts.timing, "Record wall time in the report");

  std::uint32_t p = 0;
  std::size_t cap = default_closure_cap();
  auto* perfect = app.add_subcommand("perfect", "Order and derived index of the adjoint elementary group over F_p");
  perfect->add_option("--type", type, "Type; omit with --p for the default catalog");
  perfect->add_option("--p", p, "Prime");
  perfect->add_option("--cap", cap, "Element cap (default from RELROOT_CAP or 1000000)");
  perfect->add_option("--report", report_path, "Write the rows as JSON to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) {
      std::cout << roots_json(RootType::parse(type)).dump(2) << "\n";
      return 0;
    }
    if (*fold) {
      std::cout << fold_json(make_spec(type, gamma, levi)).dump(2) << "\n";
      return 0;
    }
    if (*nmaps) {
      std::cout << nmaps_json(make_spec(type, gamma, levi), a_text, b_text, !no_verify).dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      if (verify->count("--max-rank")) opts.max_rank = max_rank;
      if (verify->count("--k")) opts.k = k;
      if (verify->count("--eps")) opts.eps = parse_eps(eps_text);
      SuiteReport report = run_suite(suite, opts);
      if (!report_path.empty()) write_file(report_path, report.dump() + "\n");
      Summary s = report.summary();
      for (const auto& c : report.cases)
        if (c.status == CaseStatus::Fail) std::cout << "FAIL " << c.id << "\n";
      std::cout << "suite " << suite << ": " << report.cases.size() << " cases, " << s.pass << " pass, " << s.fail
                << " fail, " << s.skipped << " skipped\n";
      return s.fail == 0 ? 0 : kExitFailures;
    }
    if (*perfect) {
      std::vector<std::pair<RootType, std::uint32_t>> cases;
      if (type.empty() && p == 0) cases = default_perfectness_catalog();
      else if (!type.empty() && p != 0) cases = {{RootType::parse(type), p}};
      else throw InvalidArgument("--type and --p must be given together");
      auto rows = perfectness_report(cases, cap);
      std::cout << format_table(rows);
      if (!report_path.empty()) {
        json j = json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        write_file(report_path, j.dump(2) + "\n");
      }
      for (const auto& r : rows)
        if (r.verdict == "disagrees") return kExitFailures;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
