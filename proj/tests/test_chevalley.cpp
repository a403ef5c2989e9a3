#include <doctest.h>

#include <random>
#include <set>

#include "relroot/chevalley.hpp"
#include "relroot/error.hpp"
#include "support.hpp"

using namespace relroot;
using support::Factors;

namespace {

std::size_t idx(const RootSystem& rs, Coords c) { return rs.index_of(c).value(); }

// [x, y] as a sparse vector, read from the table.
std::map<std::uint32_t, std::int64_t> br(const ChevalleyBasis& cb, std::size_t x, std::size_t y) {
  std::map<std::uint32_t, std::int64_t> out;
  for (const auto& e : cb.bracket(x, y)) out[e.row] += e.coeff;
  return out;
}

std::map<std::uint32_t, std::int64_t> br_vec(const ChevalleyBasis& cb, const std::map<std::uint32_t, std::int64_t>& v,
                                             std::size_t z) {
  std::map<std::uint32_t, std::int64_t> out;
  for (auto [r, c] : v)
    for (const auto& e : cb.bracket(r, z)) out[e.row] += c * e.coeff;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool jacobi_holds(const ChevalleyBasis& cb) {
  std::size_t n = cb.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      auto xy = br(cb, x, y);
      for (std::size_t z = y + 1; z < n; ++z) {
        std::map<std::uint32_t, std::int64_t> sum;
        for (auto [r, c] : br_vec(cb, xy, z)) sum[r] += c;
        for (auto [r, c] : br_vec(cb, br(cb, y, z), x)) sum[r] += c;
        for (auto [r, c] : br_vec(cb, br(cb, z, x), y)) sum[r] += c;
        for (auto [r, c] : sum)
          if (c != 0) return false;
      }
    }
  return true;
}

RegistryPtr st_reg() { return VarRegistry::make({"s", "t", "s2", "t2", "u2"}); }

}  // namespace

TEST_CASE("structure constants of the examples") {
  auto a2 = chevalley_basis(RootType('A', 2));
  const auto& ra = a2->roots();
  CHECK(std::abs(a2->structure_constant(idx(ra, {1, 0}), idx(ra, {0, 1}))) == 1);

  auto c2 = chevalley_basis(RootType('C', 2));
  const auto& rc = c2->roots();
  CHECK(std::abs(c2->structure_constant(idx(rc, {1, 0}), idx(rc, {1, 1}))) == 2);

  auto g2 = chevalley_basis(RootType('G', 2));
  int best = 0;
  for (std::size_t a = 0; a < g2->roots().size(); ++a)
    for (std::size_t b = 0; b < g2->roots().size(); ++b) best = std::max(best, std::abs(g2->structure_constant(a, b)));
  CHECK(best == 3);
}

TEST_CASE("antisymmetry and |N| = p + 1 up to rank 8") {
  for (const auto& t : irreducible_types(8)) {
    CAPTURE(t.name());
    auto cb = chevalley_basis(t);
    const auto& rs = cb->roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        int n = cb->structure_constant(a, b);
        REQUIRE(n == -cb->structure_constant(b, a));
        if (!rs.sum(a, b)) {
          REQUIRE(n == 0);
          continue;
        }
        auto [p, q] = rs.root_string(a, b);
        (void)q;
        REQUIRE(std::abs(n) == p + 1);
      }
  }
}

TEST_CASE("Jacobi identity from the bracket table") {
  for (const auto& t : irreducible_types(6)) {
    CAPTURE(t.name());
    REQUIRE(jacobi_holds(*chevalley_basis(t)));
  }
}

TEST_CASE("root elements") {
  auto reg = st_reg();
  Poly s = Poly::var(reg, "s"), t = Poly::var(reg, "t");
  auto cb = chevalley_basis(RootType('B', 3));
  std::size_t n = cb->dim();
  auto id = UnipotentMatrix::identity(n, Poly(0), Poly(1));
  for (std::size_t r = 0; r < cb->roots().size(); ++r) {
    CHECK(adjoint_root_element(*cb, r, Poly::constant(reg, 0)) == id);
    CHECK(adjoint_root_element(*cb, r, s) * adjoint_root_element(*cb, r, t) == adjoint_root_element(*cb, r, s + t));
    CHECK(adjoint_root_element(*cb, r, s) * adjoint_root_element(*cb, r, -s) == id);
  }
  // The library matrix agrees with the series from the bracket table.
  for (std::size_t r = 0; r < cb->roots().size(); ++r) {
    auto m = adjoint_root_element(*cb, r, s);
    auto cols = support::product_columns(*cb, {{r, s}});
    for (std::size_t j = 0; j < n; ++j) REQUIRE(m.column(j) == cols[j]);
  }

  auto a1 = chevalley_basis(RootType('A', 1));
  REQUIRE(a1->dim() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<Poly> v(3, Poly(0));
    v[j] = Poly(1);
    for (int k = 0; k < 3; ++k) v = support::ad_apply(*a1, 0, v);
    for (const auto& x : v) CHECK(x.is_zero());
  }
}

TEST_CASE("collection examples") {
  auto reg = st_reg();
  Poly s = Poly::var(reg, "s"), t = Poly::var(reg, "t");
  auto a2 = chevalley_basis(RootType('A', 2));
  const auto& ra = a2->roots();
  std::size_t a1 = idx(ra, {1, 0}), b1 = idx(ra, {0, 1}), ab = idx(ra, {1, 1});
  Word<Poly> w{{b1, t}, {a1, s}};
  // Lexicographic tie-breaking already puts (0,1) first, so w would be left as is.
  CHECK(collect_to_normal_form(*a2, w).size() == 2);
  auto nf = collect_to_normal_form(*a2, w, {a1, b1, ab});
  REQUIRE(nf.size() == 3);
  CHECK(nf[0].root == a1);
  CHECK(nf[0].t == s);
  CHECK(nf[1].root == b1);
  CHECK(nf[1].t == t);
  CHECK(nf[2].root == ab);
  CHECK((nf[2].t == s * t || nf[2].t == -(s * t)));
  CHECK(support::same_product(*a2, {{b1, t}, {a1, s}}, {{a1, s}, {b1, t}, {ab, nf[2].t}}));

  Word<Poly> single{{a1, s}};
  auto one = collect_to_normal_form(*a2, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].t == s);
  CHECK_THROWS_AS(collect_to_normal_form(*a2, Word<Poly>{{a1, s}, {ra.negate(b1), t}}), PreconditionError);
}

TEST_CASE("C2: g1(s,t) g2(s',t',u') collects onto A1+A2 and 2A1+A2") {
  auto reg = st_reg();
  Poly s = Poly::var(reg, "s"), t = Poly::var(reg, "t");
  Poly s2 = Poly::var(reg, "s2"), t2 = Poly::var(reg, "t2"), u2 = Poly::var(reg, "u2");
  auto cb = chevalley_basis(RootType('C', 2));
  const auto& rs = cb->roots();
  std::size_t A1 = idx(rs, {1, 0}), A2 = idx(rs, {0, 1}), A12 = idx(rs, {1, 1}), mA2 = idx(rs, {0, -1});
  Word<Poly> g1 = commutator_word<Poly>({{A1, s}}, {{A2, t}});
  Word<Poly> g2 = commutator_word<Poly>({{A2, u2}}, commutator_word<Poly>({{A12, s2}}, {{mA2, t2}}));
  Word<Poly> w = concat(g1, g2);
  Poly zero = Poly::constant(reg, 0), one = Poly::constant(reg, 1);
  auto order = default_order(rs, true);
  auto coeffs = collect_h_columns(*cb, h_columns(*cb, w, zero, one), order, zero, one);
  Factors nf, word;
  std::set<Coords> support_roots;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!coeffs[i].is_zero()) {
      nf.push_back({order[i], coeffs[i]});
      support_roots.insert(rs.root(order[i]));
    }
  CHECK(support_roots == std::set<Coords>{{1, 1}, {2, 1}});
  for (const auto& l : w) word.push_back({l.root, l.t});
  CHECK(support::same_product(*cb, word, nf));
}

TEST_CASE("commutator constants of the rank-2 examples") {
  auto reg = st_reg();
  Poly s = Poly::var(reg, "s"), t = Poly::var(reg, "t");
  {
    auto cb = chevalley_basis(RootType('C', 2));
    const auto& rs = cb->roots();
    auto terms = commutator_constants(*cb, idx(rs, {1, 0}), idx(rs, {0, 1}));
    REQUIRE(terms.size() == 2);
    CHECK(rs.root(terms[0].root) == Coords{1, 1});
    CHECK((terms[0].i == 1 && terms[0].j == 1));
    CHECK(rs.root(terms[1].root) == Coords{2, 1});
    CHECK((terms[1].i == 2 && terms[1].j == 1));
    for (const auto& x : terms) CHECK(std::abs(x.c) == 1);
  }
  {
    auto cb = chevalley_basis(RootType('G', 2));
    const auto& rs = cb->roots();
    auto terms = commutator_constants(*cb, idx(rs, {1, 0}), idx(rs, {0, 1}));
    std::set<std::pair<int, int>> ij;
    for (const auto& x : terms) ij.insert({x.i, x.j});
    CHECK(ij == std::set<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {3, 2}});
  }
  {
    auto cb = chevalley_basis(RootType('D', 4));
    const auto& rs = cb->roots();
    CHECK(commutator_constants(*cb, idx(rs, {1, 0, 0, 0}), idx(rs, {0, 0, 1, 0})).empty());
    CHECK_THROWS_AS(commutator_constants(*cb, 0, 0), PreconditionError);
  }
}

TEST_CASE("commutator formula holds as a matrix identity") {
  auto reg = st_reg();
  Poly s = Poly::var(reg, "s"), t = Poly::var(reg, "t");
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    auto cb = chevalley_basis(RootType::parse(name));
    const auto& rs = cb->roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (a == b || a == rs.negate(b)) continue;
        Factors rhs;
        for (const auto& x : commutator_constants(*cb, a, b)) {
          REQUIRE(std::set<std::int64_t>{1, 2, 3}.count(std::abs(x.c)));
          rhs.push_back({x.root, s.pow(x.i) * t.pow(x.j) * Rational(long(x.c))});
        }
        REQUIRE(support::same_product(*cb, support::commutator({{a, s}}, {{b, t}}), rhs));
      }
  }
}

TEST_CASE("collection is a left inverse of expansion") {
  auto reg = VarRegistry::make({"a", "b", "c"});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
  for (const char* name : {"B3", "G2", "A4", "F4"}) {
    auto cb = chevalley_basis(RootType::parse(name));
    auto order = default_order(cb->roots(), true);
    for (int trial = 0; trial < 5; ++trial) {
      Word<Poly> w;
      for (std::size_t r : order)
        if (coin(rng) == 0) w.push_back({r, Poly::var(reg, std::size_t(coin(rng))) * Rational(val(rng) | 1)});
      if (w.empty()) continue;
      auto nf = collect_to_normal_form(*cb, w);
      REQUIRE(nf.size() == w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        REQUIRE(nf[i].root == w[i].root);
        REQUIRE(nf[i].t == w[i].t);
      }
    }
  }
}
