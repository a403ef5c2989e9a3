#include <doctest.h>

#include <nlohmann/json.hpp>

#include "relroot/error.hpp"
#include "relroot/suites.hpp"

using namespace relroot;

TEST_CASE("report json round trip and summary") {
  SuiteOptions opts;
  opts.k = 5;
  auto rep = run_suite("c2", opts);
  CHECK(rep.cases.size() == 2);
  auto s = rep.summary();
  CHECK(s.pass == 2);
  CHECK(s.fail + s.skipped == 0);

  std::string text = rep.dump();
  auto j = nlohmann::json::parse(text);
  CHECK(j.dump(2) == text);
  CHECK(j.at("suite") == "c2");
  CHECK(j.at("summary").at("pass") == 2);
  CHECK(j.at("wallTime") == 0);
  for (std::size_t i = 1; i < j.at("cases").size(); ++i)
    CHECK(j["cases"][i - 1]["id"].get<std::string>() < j["cases"][i]["id"].get<std::string>());
}

TEST_CASE("decomposition suite counts rank-1 components") {
  // Rank <= 2 by hand: A1 {1}; A2 {1}, {2}, flip; B2 {1}, {2}; G2 {1}, {2} are rank one.
  SuiteOptions opts;
  opts.max_rank = 2;
  auto s = run_suite("lemma1", opts).summary();
  CHECK(s.skipped == 8);
  CHECK(s.pass == 3);
  CHECK(s.fail == 0);
}

TEST_CASE("suite option handling") {
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
  CHECK_FALSE(parse_eps("symbolic").has_value());
  CHECK(*parse_eps("-3/2") == ratio(-3, 2));
  CHECK_THROWS_AS(parse_eps("x"), InvalidArgument);

  SuiteOptions opts;
  opts.k = 6;
  opts.eps = EpsBinding(Rational(2));
  auto rep = run_suite("c2", opts);
  REQUIRE(rep.cases.size() == 2);
  for (const auto& c : rep.cases) CHECK(c.id.find("eps=2") != std::string::npos);

  SuiteOptions bad;
  bad.k = 4;
  auto failed = run_suite("c2", bad);
  CHECK(failed.summary().fail > 0);
}

TEST_CASE("deterministic across runs and worker counts") {
  SuiteOptions one;
  one.jobs = 1;
  SuiteOptions two;
  two.jobs = 2;
  for (const char* name : {"g2", "lemma3"}) {
    CAPTURE(name);
    auto a = run_suite(name, one).dump();
    CHECK(a == run_suite(name, one).dump());
    CHECK(a == run_suite(name, two).dump());
  }
}
