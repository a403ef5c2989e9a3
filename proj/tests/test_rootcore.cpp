#include <doctest.h>

#include <set>

#include "relroot/error.hpp"
#include "relroot/root_system.hpp"

using namespace relroot;

namespace {

// Coxeter numbers; |Phi| = rank * h is an oracle independent of the closed forms.
int coxeter_number(const RootType& t) {
  switch (t.series) {
    case 'A': return t.rank + 1;
    case 'B':
    case 'C': return 2 * t.rank;
    case 'D': return 2 * t.rank - 2;
    case 'E': return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case 'F': return 12;
    default: return 6;
  }
}

std::size_t idx(const RootSystem& rs, Coords c) { return rs.index_of(c).value(); }

}  // namespace

TEST_CASE("root counts") {
  CHECK(RootSystem(RootType('G', 2)).size() == 12);
  CHECK(RootSystem(RootType('C', 4)).size() == 32);
  RootSystem a1(RootType('A', 1));
  REQUIRE(a1.size() == 2);
  CHECK(a1.root(0) == Coords{1});
  CHECK(a1.root(1) == Coords{-1});
}

TEST_CASE("every type up to rank 8: counts, negation, sign coherence, reducedness, Cartan entries") {
  for (const auto& t : irreducible_types(8)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    REQUIRE(rs.size() == std::size_t(t.rank * coxeter_number(t)));
    REQUIRE(rs.size() == RootSystem::expected_size(t));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      Coords c = rs.root(i);
      bool nonneg = true, nonpos = true;
      for (int x : c) {
        nonneg &= x >= 0;
        nonpos &= x <= 0;
      }
      REQUIRE((nonneg || nonpos));
      Coords neg = c, twice = c;
      for (auto& x : neg) x = -x;
      for (auto& x : twice) x *= 2;
      REQUIRE(rs.index_of(neg) == rs.negate(i));
      REQUIRE_FALSE(rs.index_of(twice));
      REQUIRE(rs.height(rs.negate(i)) == -rs.height(i));
    }
    for (const auto& row : rs.cartan())
      for (int x : row) REQUIRE(std::set<int>{2, 0, -1, -2, -3}.count(x));
  }
}

TEST_CASE("root sums") {
  RootSystem c2(RootType('C', 2));
  CHECK(c2.sum(idx(c2, {1, 0}), idx(c2, {0, 1})) == idx(c2, {1, 1}));
  CHECK(c2.sum(idx(c2, {1, 1}), idx(c2, {1, 0})) == idx(c2, {2, 1}));
  CHECK_FALSE(c2.sum(idx(c2, {2, 1}), idx(c2, {0, 1})));
  RootSystem g2(RootType('G', 2));
  CHECK(g2.sum(idx(g2, {3, 1}), idx(g2, {0, 1})) == idx(g2, {3, 2}));
  std::set<Coords> pos;
  for (std::size_t i = 0; i < g2.num_positive(); ++i) pos.insert(g2.root(i));
  CHECK(pos == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
}

TEST_CASE("length classes") {
  RootSystem g2(RootType('G', 2));
  CHECK(g2.length(idx(g2, {1, 0})) == RootLength::Short);
  CHECK(g2.length(idx(g2, {0, 1})) == RootLength::Long);
  CHECK(g2.length(idx(g2, {3, 1})) == RootLength::Long);
  CHECK(g2.length(idx(g2, {3, 2})) == RootLength::Long);
  RootSystem c2(RootType('C', 2));
  CHECK(c2.length(idx(c2, {2, 1})) == RootLength::Long);
  CHECK(c2.length(idx(c2, {1, 1})) == RootLength::Short);
  RootSystem e6(RootType('E', 6));
  for (std::size_t i = 0; i < e6.size(); ++i) CHECK(e6.length(i) == RootLength::Long);
}

TEST_CASE("root strings") {
  RootSystem a2(RootType('A', 2));
  CHECK(a2.root_string(idx(a2, {1, 0}), idx(a2, {0, 1})) == std::pair{0, 1});
  RootSystem c2(RootType('C', 2));
  CHECK(c2.root_string(idx(c2, {1, 0}), idx(c2, {0, 1})) == std::pair{0, 2});
  RootSystem d4(RootType('D', 4));
  // alpha1 and alpha3 are orthogonal.
  CHECK(d4.root_string(idx(d4, {1, 0, 0, 0}), idx(d4, {0, 0, 1, 0})) == std::pair{0, 0});
  CHECK_THROWS_AS(a2.root_string(0, 0), PreconditionError);
}

TEST_CASE("root string length equals the Cartan pairing") {
  for (const auto& t : irreducible_types(6)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (a == b || a == rs.negate(b)) continue;
        auto [p, q] = rs.root_string(a, b);
        REQUIRE(p - q == rs.pairing(b, a));
      }
  }
}

TEST_CASE("type parsing and validation") {
  CHECK(RootType::parse("C4") == RootType('C', 4));
  CHECK(RootType::parse("g2").name() == "G2");
  CHECK_THROWS_AS(RootType::parse("B1"), InvalidArgument);
  CHECK_THROWS_AS(RootType::parse("E9"), InvalidArgument);
  CHECK_THROWS_AS(RootType::parse("F5"), InvalidArgument);
  CHECK_THROWS_AS(RootType::parse("X2"), InvalidArgument);
  CHECK_THROWS_AS(RootType::parse("A"), InvalidArgument);
  CHECK_THROWS_AS(RootType::parse("A2x"), InvalidArgument);
  CHECK_NOTHROW(RootType('D', 3));
}
