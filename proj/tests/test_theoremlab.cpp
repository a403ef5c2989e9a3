#include <doctest.h>

#include <set>

#include "relroot/error.hpp"
#include "relroot/relcalc.hpp"
#include "relroot/theoremlab.hpp"
#include "support.hpp"

using namespace relroot;
using nlohmann::json;
using support::Factors;

namespace {

std::shared_ptr<const ChevalleyBasis> basis_of(const VerificationCase& c) {
  return chevalley_basis(FoldingSpec::parse(c.spec).type);
}

// lhs and rhs words of a witness multiply to the same matrix.
bool words_agree(const VerificationCase& c, const char* lhs_key, const char* rhs_key) {
  auto cb = basis_of(c);
  std::vector<std::string> texts;
  support::strings_in(c.witness.at(lhs_key), texts);
  support::strings_in(c.witness.at(rhs_key), texts);
  auto reg = support::registry_for(texts);
  return support::same_product(*cb, support::factors_from_json(*cb, reg, c.witness.at(lhs_key)),
                               support::factors_from_json(*cb, reg, c.witness.at(rhs_key)));
}

// Product of the listed relative commutators against X_A(Z^k v) with v symbolic over the fiber.
bool commutator_factors_agree(const VerificationCase& c, int k) {
  auto spec = FoldingSpec::parse(c.spec);
  auto cb = chevalley_basis(spec.type);
  RelativeRootSystem rrs(root_system(spec.type), spec);
  std::size_t target = rrs.index_of(c.witness.at("A").get<Coords>()).value();
  std::size_t dim = rrs.fiber(target).size();
  std::vector<std::string> texts;
  support::strings_in(c.witness.at("factors"), texts);
  for (std::size_t i = 0; i < dim; ++i) texts.push_back("v" + std::to_string(i + 1));
  texts.push_back("Z");
  auto reg = support::registry_for(texts);
  auto parse_all = [&](const json& a) {
    std::vector<Poly> out;
    for (const auto& s : a) out.push_back(support::parse_poly(reg, s.get<std::string>()));
    return out;
  };
  Factors lhs;
  for (const auto& f : c.witness.at("factors")) {
    std::size_t b = rrs.index_of(f.at("B").get<Coords>()).value();
    std::size_t cc = rrs.index_of(f.at("C").get<Coords>()).value();
    auto part = support::commutator(support::relative_factors(rrs, b, parse_all(f.at("u"))),
                                    support::relative_factors(rrs, cc, parse_all(f.at("w"))));
    lhs.insert(lhs.end(), part.begin(), part.end());
  }
  std::vector<Poly> rhs;
  for (std::size_t i = 0; i < dim; ++i)
    rhs.push_back(Poly::var(reg, "Z", unsigned(k)) * Poly::var(reg, "v" + std::to_string(i + 1)));
  return support::same_product(*cb, lhs, support::relative_factors(rrs, target, rhs));
}

}  // namespace

TEST_CASE("decomposition catalog") {
  auto d4 = verify_lemma1_folding(FoldingSpec::parse("D4 gamma=triality levi=all"));
  REQUIRE(d4.size() == 1);
  CHECK(d4[0].status == CaseStatus::Pass);
  CHECK(d4[0].witness.at("decompositions").size() == 12);

  auto a2 = verify_lemma1_folding(FoldingSpec::parse("A2 gamma=flip levi=all"));
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].status == CaseStatus::Skipped);

  for (const auto& c : verify_lemma1_catalog(4)) {
    CAPTURE(c.id);
    CHECK(c.status != CaseStatus::Fail);
  }
}

TEST_CASE("C2 identities") {
  for (int k : {5, 6, 7}) {
    for (EpsBinding eps : {EpsBinding{}, EpsBinding{Rational(2)}}) {
      auto [lc, sc] = verify_C2_identities(k, eps);
      CAPTURE(lc.id);
      CHECK(lc.status == CaseStatus::Pass);
      CHECK(sc.status == CaseStatus::Pass);
      CHECK(lc.witness.at("signs").size() == 4);
      CHECK(sc.witness.at("signs").size() == 3);
      CHECK(words_agree(lc, "lhs", "rhs"));
      CHECK(words_agree(sc, "lhs", "rhs"));
    }
  }
  CHECK_THROWS_AS(verify_C2_identities(4, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(verify_C2_identities(5, Rational(1)), PreconditionError);
  CHECK_THROWS_AS(verify_C2_identities(5, Rational(0)), PreconditionError);
}

TEST_CASE("C2 sign search finds exactly the recorded assignment class") {
  auto [lc, sc] = verify_C2_identities(5, std::nullopt);
  Signs recorded;
  for (const char* slot : kC2LongSlots) recorded.push_back(lc.witness.at("signs").at(slot).get<int>());
  CHECK(c2_long_identity_holds(5, std::nullopt, recorded));
  CHECK_FALSE(c2_long_identity_holds(5, std::nullopt, {recorded[0], recorded[1], recorded[2], -recorded[3]}));
}

TEST_CASE("G2 identities") {
  for (auto [kl, ks] : {std::pair{2, 3}, {3, 4}, {4, 5}}) {
    auto [lc, sc] = verify_G2_identities(kl, ks, std::nullopt);
    CAPTURE(lc.id);
    CHECK(lc.status == CaseStatus::Pass);
    CHECK(sc.status == CaseStatus::Pass);
    CHECK(words_agree(lc, "lhs", "rhs"));
    CHECK(words_agree(sc, "lhs", "normalForm"));
    const auto& nf = sc.witness.at("normalForm");
    for (std::size_t i = 0; i < nf.size(); ++i) {
      Coords root = nf[i].at("root").get<Coords>();
      if (root == Coords{3, 1} || root == Coords{3, 2}) CHECK(sc.witness.at("lengths")[i] == "long");
    }
  }
  CHECK_THROWS_AS(verify_G2_identities(1, 3, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(verify_G2_identities(2, 2, std::nullopt), PreconditionError);
}

TEST_CASE("G2 expansion monomials") {
  auto c = verify_G2_expansion();
  CHECK(c.status == CaseStatus::Pass);
  std::set<std::string> monomials;
  for (const auto& l : c.witness.at("normalForm")) {
    std::string t = l.at("t").get<std::string>();
    if (t[0] == '-') t = t.substr(1);
    auto star = t.find('*');
    if (star != std::string::npos && std::isdigit(static_cast<unsigned char>(t[0]))) t = t.substr(star + 1);
    monomials.insert(t);
  }
  CHECK(monomials == std::set<std::string>{"s*t", "s^2*t", "s^3*t", "s^3*t^2"});
}

TEST_CASE("case schemas") {
  auto f4 = verify_case_schemas(CaseSchema::F4Long, 0, 2);
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].status == CaseStatus::Pass);
  CHECK(f4[0].witness.at("longRoots") == 24);
  {
    // Each triple (A, B, C, n): [x_B(Z), x_C(n Z v)] = x_A(Z^2 v).
    auto cb = chevalley_basis(RootType('F', 4));
    auto reg = VarRegistry::make({"Z", "v"});
    Poly Z = Poly::var(reg, "Z"), v = Poly::var(reg, "v");
    const auto& rs = cb->roots();
    for (const auto& t : f4[0].witness.at("triples")) {
      std::size_t a = rs.index_of(t[0].get<Coords>()).value();
      std::size_t b = rs.index_of(t[1].get<Coords>()).value();
      std::size_t c = rs.index_of(t[2].get<Coords>()).value();
      long n = t[3].get<long>();
      REQUIRE(rs.length(a) == RootLength::Long);
      REQUIRE(support::same_product(*cb, support::commutator({{b, Z}}, {{c, Z * v * n}}),
                                    {{a, Z.pow(2) * v}}));
    }
  }

  for (int l : {3, 4}) {
    auto bl = verify_case_schemas(CaseSchema::BlPairs, l);
    REQUIRE(bl.size() == 1);
    CHECK(bl[0].status == CaseStatus::Pass);
    CHECK_FALSE(bl[0].witness.at("triples").empty());
  }

  auto bc2 = verify_case_schemas(CaseSchema::ClBC2, 3, 4);
  REQUIRE(bc2.size() == 1);
  CHECK(bc2[0].status == CaseStatus::Pass);
  CHECK(commutator_factors_agree(bc2[0], 4));

  auto c2 = verify_case_schemas(CaseSchema::ClC2, 4, 3);
  REQUIRE(c2.size() == 2);
  for (const auto& c : c2) {
    CAPTURE(c.id);
    CHECK(c.status == CaseStatus::Pass);
    CHECK_FALSE(c.witness.at("factors").empty());
    CHECK(commutator_factors_agree(c, 3));
  }

  CHECK_THROWS_AS(verify_case_schemas(CaseSchema::F4Long, 0, 1), PreconditionError);
  CHECK_THROWS_AS(verify_case_schemas(CaseSchema::BlPairs, 2), PreconditionError);
  CHECK_THROWS_AS(verify_case_schemas(CaseSchema::ClBC2, 3, 3), PreconditionError);
  CHECK_THROWS_AS(verify_case_schemas(CaseSchema::ClC2, 5, 3), PreconditionError);
  CHECK_THROWS_AS(verify_case_schemas(CaseSchema::ClC2, 4, 2), PreconditionError);
  CHECK(case_schema_from_string("Cl_BC2") == CaseSchema::ClBC2);
  CHECK_THROWS_AS(case_schema_from_string("nope"), InvalidArgument);
}

TEST_CASE("surjectivity and spanning suites") {
  auto cases = verify_lemma2_suite(4, 0);
  std::set<std::string> ids;
  for (const auto& c : cases) {
    CAPTURE(c.id);
    CHECK(c.status == CaseStatus::Pass);
    ids.insert(c.id);
  }
  CHECK(ids.count("lemma2/d/B3 gamma=trivial levi=1,2"));
  CHECK(ids.count("lemma2/c/C3 gamma=trivial levi=1,2"));
  for (const auto& c : cases)
    if (c.id.rfind("lemma2/outside/", 0) == 0) CHECK(c.witness.at("maxCoefficient") == 2);

  for (const auto& c : verify_lemma3_suite(0)) {
    CAPTURE(c.id);
    CHECK(c.status == CaseStatus::Pass);
    for (const char* field : {"Q", "F2", "F3", "F5"}) {
      const auto& f = c.witness.at("fields").at(field);
      CHECK(f.at("rank") == f.at("dim"));
    }
  }
}

TEST_CASE("commutator maps recompose on a small catalog") {
  for (const auto& c : verify_commutator_maps_catalog(3)) {
    CAPTURE(c.id);
    CHECK(c.status == CaseStatus::Pass);
    CHECK(c.witness.at("pairs").get<long>() > 0);
  }
}
