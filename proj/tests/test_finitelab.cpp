#include <doctest.h>

#include <cstdlib>

#include "relroot/error.hpp"
#include "relroot/finitelab.hpp"

using namespace relroot;

TEST_CASE("mod-p root elements reduce the integral ones") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto t = RootType::parse(name);
    auto cb = chevalley_basis(t);
    for (std::uint32_t p : {2u, 3u, 5u})
      for (std::size_t r = 0; r < cb->roots().size(); ++r)
        for (long c : {1L, 2L, -1L}) {
          auto m = adjoint_root_element(*cb, r, Poly(c));
          auto q = adjoint_root_element_mod(*cb, r, c, p);
          for (std::size_t i = 0; i < cb->dim(); ++i)
            for (std::size_t j = 0; j < cb->dim(); ++j) {
              Rational v = m(i, j).constant_value();
              REQUIRE(v.get_den() == 1);
              long want = ((v.get_num().get_si() % long(p)) + long(p)) % long(p);
              REQUIRE(q(i, j) == want);
            }
        }
  }
}

TEST_CASE("known group orders and derived indices") {
  struct Row {
    const char* type;
    std::uint32_t p;
    std::uint64_t order;
    std::uint64_t index;
  };
  // Orders of PSL3(2), PSL3(3), Sp4(2), PSp4(3), G2(2), PSL4(2), PGL2(2), PGL2(3) images.
  for (Row r : {Row{"A2", 2, 168, 1}, Row{"A2", 3, 5616, 1}, Row{"C2", 2, 720, 2}, Row{"C2", 3, 25920, 1},
                Row{"G2", 2, 12096, 2}, Row{"A3", 2, 20160, 1}, Row{"A1", 2, 6, 2}, Row{"A1", 3, 12, 3}}) {
    CAPTURE(r.type);
    CAPTURE(r.p);
    auto t = RootType::parse(r.type);
    auto g = generate_elementary_group(t, r.p, 100000);
    CHECK(g.order() == r.order);
    CHECK(predicted_order(t, r.p) == r.order);
    CHECK(derived_subgroup_index(g, 100000) == r.index);
  }
}

TEST_CASE("cyclic subgroup has trivial derived subgroup") {
  auto cb = chevalley_basis(RootType('A', 2));
  auto g = close_group({adjoint_root_element_mod(*cb, 0, 1, 3)}, 100);
  CHECK(g.order() == 3);
  auto d = derived_subgroup(g, 100);
  CHECK(d.order() == 1);
  CHECK(derived_subgroup_index(g, 100) == 3);
}

TEST_CASE("preconditions and cap") {
  CHECK_THROWS_AS(generate_elementary_group(RootType('A', 2), 4, 1000), PreconditionError);
  CHECK_THROWS_AS(generate_elementary_group(RootType('A', 2), 257, 1000), PreconditionError);
  CHECK_THROWS_AS(generate_elementary_group(RootType('A', 2), 2, 100), CapExceeded);
  auto cb = chevalley_basis(RootType('A', 2));
  CHECK_THROWS_AS(close_group({adjoint_root_element_mod(*cb, 0, 1, 2), adjoint_root_element_mod(*cb, 1, 1, 2)}, 5),
                  CapExceeded);
  CHECK(predicted_order(RootType('B', 3), 3) > 1000000);
}

TEST_CASE("report rows and table") {
  auto rows = perfectness_report({{RootType('C', 2), 2}, {RootType('A', 2), 3}, {RootType('A', 1), 2},
                                  {RootType('B', 3), 3}},
                                 100000);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].result == "not perfect");
  CHECK(rows[0].prediction == "not perfect");
  CHECK(rows[0].verdict == "agrees");
  CHECK(rows[1].result == "perfect");
  CHECK(rows[1].verdict == "agrees");
  CHECK(rows[2].prediction == "out-of-hypothesis");
  CHECK(rows[2].verdict == "out-of-hypothesis");
  CHECK(rows[3].result == "skipped: cap");
  CHECK_FALSE(rows[3].order.has_value());
  CHECK(rows[3].verdict == "skipped");

  auto j = to_json(rows[0]);
  CHECK(j.at("order") == 720);
  CHECK(j.at("index") == 2);

  std::string table = format_table(rows);
  CHECK(table.find("perfectness of adjoint image") == 0);
  CHECK(table.find("skipped: cap") != std::string::npos);
  CHECK(default_perfectness_catalog().size() == 10);
}

TEST_CASE("cap from environment") {
  setenv("RELROOT_CAP", "1234", 1);
  CHECK(default_closure_cap() == 1234);
  unsetenv("RELROOT_CAP");
  CHECK(default_closure_cap() == 1000000);
}
