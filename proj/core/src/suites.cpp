#include "relroot/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "relroot/error.hpp"

namespace relroot {

namespace {

using Job = std::function<std::vector<VerificationCase>()>;

struct NamedJob {
  std::string label;
  Job run;
};

std::string eps_label(const EpsBinding& eps) { return eps ? eps->get_str() : "symbolic"; }

std::vector<EpsBinding> eps_choices(const SuiteOptions& o, std::vector<EpsBinding> fallback) {
  if (o.eps) return {*o.eps};
  return fallback;
}

void add_c2(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  std::vector<int> ks = o.k ? std::vector<int>{*o.k} : std::vector<int>{5, 6, 7};
  // A single exponent on its own keeps eps symbolic; the full grid also binds eps to 2.
  std::vector<EpsBinding> eps = eps_choices(o, o.k ? std::vector<EpsBinding>{std::nullopt}
                                                   : std::vector<EpsBinding>{std::nullopt, Rational(2)});
  for (int k : ks)
    for (const auto& e : eps)
      jobs.push_back({"c2/k=" + std::to_string(k) + "/eps=" + eps_label(e), [k, e] {
                        auto [a, b] = verify_C2_identities(k, e);
                        return std::vector<VerificationCase>{a, b};
                      }});
}

void add_g2(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  std::vector<std::pair<int, int>> ks;
  if (o.k) ks = {{*o.k, *o.k}};
  else ks = {{2, 3}, {3, 4}, {4, 5}};
  EpsBinding eps = o.eps ? *o.eps : EpsBinding{};
  for (auto [kl, ks_] : ks)
    jobs.push_back({"g2/k=" + std::to_string(kl) + "," + std::to_string(ks_), [kl, ks_, eps] {
                      auto [a, b] = verify_G2_identities(kl, ks_, eps);
                      return std::vector<VerificationCase>{a, b};
                    }});
  if (!o.k) jobs.push_back({"g2/expansion", [] { return std::vector<VerificationCase>{verify_G2_expansion()}; }});
}

void add_cases(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  auto add = [&](CaseSchema s, int l, int k) {
    jobs.push_back({std::string("cases/") + to_string(s) + "/l=" + std::to_string(l) + "/k=" + std::to_string(k),
                    [s, l, k] { return verify_case_schemas(s, l, k); }});
  };
  if (o.k) {
    int k = *o.k;
    add(CaseSchema::F4Long, 0, k);
    for (int l : {3, 4, 5}) add(CaseSchema::BlPairs, l, k);
    for (int l : {3, 4}) add(CaseSchema::ClBC2, l, k);
    add(CaseSchema::ClC2, 4, k);
    return;
  }
  for (int k : {2, 3, 4}) add(CaseSchema::F4Long, 0, k);
  for (int l : {3, 4, 5}) add(CaseSchema::BlPairs, l, 0);
  for (int l : {3, 4})
    for (int k : {4, 5, 6}) add(CaseSchema::ClBC2, l, k);
  for (int k : {3, 4, 5}) add(CaseSchema::ClC2, 4, k);
  add(CaseSchema::ClC2, 6, 3);
}

void add_lemma1(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  int max_rank = o.max_rank.value_or(6);
  for (const auto& t : irreducible_types(max_rank))
    jobs.push_back({"lemma1/" + t.name(), [t] { return verify_lemma1_type(t); }});
}

void add_lemma2(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  int max_rank = o.max_rank.value_or(5);
  std::uint64_t seed = o.seed;
  jobs.push_back({"lemma2", [max_rank, seed] { return verify_lemma2_suite(max_rank, seed); }});
}

void add_lemma3(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  std::uint64_t seed = o.seed;
  jobs.push_back({"lemma3", [seed] { return verify_lemma3_suite(seed); }});
}

void add_eq1(std::vector<NamedJob>& jobs, const SuiteOptions& o) {
  int max_rank = o.max_rank.value_or(5);
  for (const auto& t : irreducible_types(max_rank))
    jobs.push_back({"eq1/" + t.name(), [t] { return std::vector<VerificationCase>{verify_commutator_maps_type(t)}; }});
}

std::vector<VerificationCase> run_jobs(const std::vector<NamedJob>& jobs, unsigned threads) {
  std::vector<std::vector<VerificationCase>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        VerificationCase c;
        c.id = jobs[i].label + "/error";
        c.spec = "job raised an exception";
        c.status = CaseStatus::Fail;
        c.witness = {{"error", e.what()}};
        results[i] = {c};
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, unsigned(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<VerificationCase> out;
  for (auto& r : results)
    for (auto& c : r) out.push_back(std::move(c));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "c2", "g2", "cases", "eq1", "all"};
  return names;
}

EpsBinding parse_eps(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  Rational q;
  if (q.set_str(text, 10) != 0) throw InvalidArgument("cannot parse eps: " + text);
  q.canonicalize();
  return q;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  std::vector<NamedJob> jobs;
  if (name == "c2") add_c2(jobs, opts);
  else if (name == "g2") add_g2(jobs, opts);
  else if (name == "cases") add_cases(jobs, opts);
  else if (name == "lemma1") add_lemma1(jobs, opts);
  else if (name == "lemma2") add_lemma2(jobs, opts);
  else if (name == "lemma3") add_lemma3(jobs, opts);
  else if (name == "eq1") add_eq1(jobs, opts);
  else if (name == "all") {
    SuiteOptions base;
    base.seed = opts.seed;
    add_c2(jobs, base);
    add_g2(jobs, base);
    add_cases(jobs, base);
    add_lemma1(jobs, base);
    add_lemma2(jobs, base);
    add_lemma3(jobs, base);
  } else {
    throw InvalidArgument("unknown suite: " + name);
  }

  SuiteReport report;
  report.suite = name;
  report.tool_version = tool_version();
  report.cases = run_jobs(jobs, opts.jobs);
  if (opts.timing) report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace relroot
