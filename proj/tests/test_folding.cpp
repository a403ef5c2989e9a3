#include <doctest.h>

#include <algorithm>
#include <set>

#include "relroot/chevalley.hpp"
#include "relroot/error.hpp"
#include "relroot/folding.hpp"

using namespace relroot;

namespace {

RelativeRootSystem build(const std::string& text) {
  auto spec = FoldingSpec::parse(text);
  return RelativeRootSystem(root_system(spec.type), spec);
}

std::size_t rel(const RelativeRootSystem& r, Coords c) { return r.index_of(c).value(); }

// Brute-force clause check: scans i, j in 1..6 directly instead of solving in the plane.
bool brute_force_valid(const RelativeRootSystem& r, std::size_t a, std::size_t b, std::size_t c) {
  const Coords &A = r.rel_root(a), &B = r.rel_root(b), &C = r.rel_root(c);
  for (std::size_t k = 0; k < A.size(); ++k)
    if (B[k] + C[k] != A[k]) return false;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      bool zero = true;
      for (std::size_t k = 0; k < B.size(); ++k) zero &= i * B[k] + j * C[k] == 0;
      if (zero && (i || j)) return false;  // collinear
    }
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == 1 && j == 1) continue;
      Coords x(A.size());
      for (std::size_t k = 0; k < A.size(); ++k) x[k] = i * B[k] + j * C[k];
      auto xi = r.index_of(x);
      if (!xi) continue;
      if (r.sign(*xi) != r.sign(a) || std::abs(r.level(*xi)) <= std::abs(r.level(a))) return false;
    }
  return true;
}

std::set<Coords> unordered(const RelativeRootSystem& r, const Decomposition& d) {
  return {r.rel_root(d.b), r.rel_root(d.c)};
}

}  // namespace

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(RootSystem(RootType('B', 3))).size() == 1);
  auto a3 = diagram_automorphisms(RootSystem(RootType('A', 3)));
  REQUIRE(a3.size() == 2);
  CHECK(a3[0] == Perm{0, 1, 2});
  CHECK(a3[1] == Perm{2, 1, 0});
  CHECK(diagram_automorphisms(RootSystem(RootType('D', 4))).size() == 6);
  CHECK(diagram_automorphisms(RootSystem(RootType('E', 6))).size() == 2);
  CHECK(diagram_automorphisms(RootSystem(RootType('G', 2))).size() == 1);
  CHECK(diagram_automorphisms(RootSystem(RootType('C', 4))).size() == 1);
}

TEST_CASE("automorphisms preserve the Gram matrix") {
  for (const auto& t : irreducible_types(8)) {
    RootSystem rs(t);
    auto g = rs.gram();
    for (const auto& p : diagram_automorphisms(rs))
      for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j) REQUIRE(g[p[i]][p[j]] == g[i][j]);
  }
}

TEST_CASE("relative systems of the examples") {
  auto id = build("A3 gamma=trivial levi=all");
  CHECK(id.size() == 12);
  for (std::size_t i = 0; i < id.size(); ++i) CHECK(id.fiber(i).size() == 1);

  auto flip = build("A3 gamma=flip levi=all");
  CHECK(flip.size() == 8);
  std::set<Coords> got(flip.rel_roots().begin(), flip.rel_roots().end());
  // Brute-force projection: orbit {a1, a3} -> first coordinate, a2 -> second.
  std::set<Coords> expected;
  for (std::size_t i = 0; i < id.size(); ++i) {
    const Coords& c = id.rel_root(i);
    expected.insert({c[0] + c[2], c[1]});
  }
  CHECK(got == expected);
  CHECK(classify_relative_type(flip, 0).name() == "C2");

  auto c4 = build("C4 gamma=trivial levi=2,4");
  CHECK(c4.rank() == 2);
  CHECK(classify_relative_type(c4, 0).name() == "C2");
  CHECK(classify_relative_type(build("B3 gamma=trivial levi=1,2"), 0).name() == "B2");
  CHECK(classify_relative_type(build("C3 gamma=trivial levi=1,2"), 0).name() == "BC2");
  CHECK(classify_relative_type(build("F4 gamma=trivial levi=all"), 0).name() == "F4");
  CHECK(classify_relative_type(build("D4 gamma=triality levi=all"), 0).name() == "G2");
  CHECK_THROWS_AS(classify_relative_type(build("G2 gamma=trivial levi=1"), 0), PreconditionError);
}

TEST_CASE("spec parsing") {
  CHECK_THROWS_AS(FoldingSpec::parse("A3 gamma=flip levi=1"), InvalidArgument);
  CHECK_THROWS_AS(FoldingSpec::parse("A3 gamma=triality levi=all"), InvalidArgument);
  CHECK_THROWS(FoldingSpec::parse("A3 gamma=trivial levi=5"));
  auto s = FoldingSpec::parse("D4 gamma=triality levi=all");
  CHECK(s.gamma.size() == 6);
  CHECK(FoldingSpec::parse(s.to_string()).to_string() == s.to_string());
}

TEST_CASE("decomposition examples") {
  auto c2 = build("C2 gamma=trivial levi=all");
  auto d = decompose_relative_root(c2, rel(c2, {2, 1}));
  CHECK(c2.rel_root(d.b) == Coords{1, 1});
  CHECK(c2.rel_root(d.c) == Coords{1, 0});

  auto d4 = build("D4 gamma=triality levi=all");
  REQUIRE(d4.size() == 12);
  std::size_t a = rel(d4, {1, 0});
  auto e = decompose_relative_root(d4, a);
  CHECK(d4.rel_root(e.b) == Coords{1, 1});
  CHECK(d4.rel_root(e.c) == Coords{0, -1});
  std::set<int> levels;
  for (auto [i, j] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    Coords x{i, i - j};
    CAPTURE(x);
    auto xi = d4.index_of(x);
    REQUIRE(xi);
    CHECK(d4.is_positive(*xi));
    levels.insert(d4.level(*xi));
  }
  CHECK(levels == std::set<int>{3, 4, 5});

  auto flip = build("A3 gamma=flip levi=all");
  auto f = decompose_relative_root(flip, rel(flip, {2, 1}));
  CHECK(unordered(flip, f) == std::set<Coords>{{1, 0}, {1, 1}});

  CHECK_THROWS_AS(decompose_relative_root(build("A2 gamma=flip levi=all"), 0), PreconditionError);
}

TEST_CASE("projection properties over every folding up to rank 5") {
  for (const auto& t : irreducible_types(5)) {
    auto rs = root_system(t);
    for (const auto& gamma : automorphism_subgroups(*rs)) {
      for (unsigned mask = 1; mask < (1u << t.rank); ++mask) {
        std::vector<int> levi;
        for (int i = 0; i < t.rank; ++i)
          if (mask >> i & 1) levi.push_back(i);
        bool invariant = true;
        for (const auto& p : gamma)
          for (int n : levi) invariant &= bool(mask >> p[n] & 1);
        if (!invariant) {
          CHECK_THROWS_AS(FoldingSpec(t, gamma, levi), InvalidArgument);
          continue;
        }
        RelativeRootSystem r(rs, FoldingSpec(t, gamma, levi));
        CAPTURE(r.spec().to_string());
        REQUIRE(r.rank() == int(r.orbits().size()));
        std::size_t fibered = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
          fibered += r.fiber(i).size();
          for (std::size_t f : r.fiber(i)) {
            REQUIRE(rs->is_positive(f) == r.is_positive(i));
            REQUIRE(r.project(rs->root(f)) == r.rel_root(i));
          }
          std::vector<Coords> neg_fiber;
          for (std::size_t f : r.fiber(r.negate(i))) neg_fiber.push_back(rs->root(f));
          std::vector<Coords> expect;
          for (std::size_t f : r.fiber(i)) {
            Coords c = rs->root(f);
            for (auto& x : c) x = -x;
            expect.push_back(c);
          }
          std::sort(neg_fiber.begin(), neg_fiber.end());
          std::sort(expect.begin(), expect.end());
          REQUIRE(neg_fiber == expect);
        }
        std::size_t killed = 0;
        for (std::size_t i = 0; i < rs->size(); ++i) {
          Coords p = r.project(rs->root(i));
          if (std::all_of(p.begin(), p.end(), [](int x) { return x == 0; })) ++killed;
          for (const auto& g : gamma) {
            Coords moved(t.rank, 0);
            for (int n = 0; n < t.rank; ++n) moved[g[n]] = rs->root(i)[n];
            REQUIRE(r.project(moved) == p);
          }
          for (std::size_t j = 0; j < rs->size(); ++j) {
            Coords s = rs->root(i);
            for (int k = 0; k < t.rank; ++k) s[k] += rs->root(j)[k];
            Coords ps = r.project(s), pi = r.project(rs->root(i)), pj = r.project(rs->root(j));
            for (std::size_t k = 0; k < ps.size(); ++k) REQUIRE(ps[k] == pi[k] + pj[k]);
          }
        }
        REQUIRE(fibered + killed == rs->size());
        for (std::size_t a = 0; a < r.size(); ++a)
          for (std::size_t b = 0; b < r.size(); ++b) {
            Coords s = r.rel_root(a);
            for (std::size_t k = 0; k < s.size(); ++k) s[k] += r.rel_root(b)[k];
            if (auto si = r.index_of(s)) REQUIRE(r.level(*si) == r.level(a) + r.level(b));
          }
      }
    }
  }
}

TEST_CASE("decompositions pass an independent brute-force checker") {
  for (const auto& t : irreducible_types(6)) {
    auto rs = root_system(t);
    for (const auto& gamma : automorphism_subgroups(*rs))
      for (unsigned mask = 1; mask < (1u << t.rank); ++mask) {
        std::vector<int> levi;
        for (int i = 0; i < t.rank; ++i)
          if (mask >> i & 1) levi.push_back(i);
        bool invariant = true;
        for (const auto& p : gamma)
          for (int n : levi) invariant &= bool(mask >> p[n] & 1);
        if (!invariant) continue;
        RelativeRootSystem r(rs, FoldingSpec(t, gamma, levi));
        for (std::size_t a = 0; a < r.size(); ++a) {
          if (r.component_rank(r.component_of(a)) < 2) continue;
          auto d = decompose_relative_root(r, a);
          CAPTURE(r.spec().to_string());
          CAPTURE(r.rel_root(a));
          REQUIRE(brute_force_valid(r, a, d.b, d.c));
        }
      }
  }
}
