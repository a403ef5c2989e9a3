#include "relroot/theoremlab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "relroot/relcalc.hpp"

namespace relroot {

using nlohmann::json;

namespace {

Word<Poly> x(std::size_t root, Poly t) { return {{root, std::move(t)}}; }

Poly zpow(const RegistryPtr& reg, int n) {
  if (n < 0) throw InternalError("negative power of Z");
  return n == 0 ? Poly::constant(reg, 1) : Poly::var(reg, "Z", unsigned(n));
}

void check_eps(const EpsBinding& eps) {
  if (eps && (sgn(*eps) == 0 || *eps == 1)) throw PreconditionError("eps^2 - eps vanishes under the binding");
}

std::string eps_text(const EpsBinding& eps) { return eps ? eps->get_str() : "symbolic"; }

Word<Poly> bind(Word<Poly> w, const EpsBinding& eps) {
  if (!eps) return w;
  std::map<std::string, Poly> b{{"eps", Poly(*eps)}};
  for (auto& l : w) l.t = l.t.substitute(b);
  return w;
}

bool same_product(const ChevalleyBasis& cb, const Word<Poly>& lhs, const Word<Poly>& rhs, const RegistryPtr& reg) {
  return word_is_identity(cb, concat(lhs, inverse_word(rhs)), Poly::constant(reg, 0), Poly::constant(reg, 1));
}

json word_json(const RootSystem& rs, const Word<Poly>& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back({{"root", rs.root(l.root)}, {"t", l.t.to_string()}});
  return out;
}

Signs signs_of(unsigned mask, std::size_t n) {
  Signs s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
  return s;
}

template <std::size_t N>
json signs_json(const std::array<const char*, N>& slots, const Signs& s) {
  json out = json::object();
  for (std::size_t i = 0; i < N; ++i) out[slots[i]] = s[i];
  return out;
}

void require_signs(const Signs& s, std::size_t n) {
  if (s.size() != n) throw InvalidArgument("expected " + std::to_string(n) + " signs");
  for (int x : s)
    if (x != 1 && x != -1) throw InvalidArgument("signs must be +1 or -1");
}

struct Rank2 {
  std::shared_ptr<const RootSystem> rs;
  std::shared_ptr<const ChevalleyBasis> cb;
  RegistryPtr reg;
  std::size_t root(int i, int j) const { return *rs->index_of({i, j}); }
};

Rank2 rank2(char series) {
  RootType t(series, 2);
  return {root_system(t), chevalley_basis(t), VarRegistry::make({"Z", "v", "eps"}, "eps")};
}

std::string split_spec(const RootType& t) {
  std::vector<int> all(t.rank);
  for (int i = 0; i < t.rank; ++i) all[i] = i;
  return FoldingSpec(t, {}, all).to_string();
}

// Coefficient of a monomial (variable, exponent pairs) in coordinate k of a map.
Rational coefficient(const NMapEntry& e, std::size_t k, std::vector<std::pair<std::size_t, unsigned>> mono) {
  std::sort(mono.begin(), mono.end());
  for (const auto& term : e.coords.at(k).terms()) {
    std::vector<std::pair<std::size_t, unsigned>> m;
    for (const auto& vp : term.mono) m.push_back({vp.var, vp.exp});
    std::sort(m.begin(), m.end());
    if (m == mono) return term.coeff;
  }
  return 0;
}

bool is_unit(const Rational& c) { return c == 1 || c == -1; }

// Basis vector coordinates t e_index over a fiber of the given size.
std::vector<Poly> basis_coords(const RegistryPtr& reg, std::size_t size, std::size_t index, const Poly& t) {
  std::vector<Poly> v(size, Poly::constant(reg, 0));
  v[index] = t;
  return v;
}

struct Commutator {
  std::size_t b;
  std::vector<Poly> u;
  std::size_t c;
  std::vector<Poly> w;
};

Word<Poly> commutators_word(const RelativeRootSystem& rrs, const std::vector<Commutator>& factors) {
  Word<Poly> out;
  for (const auto& f : factors) {
    auto w = commutator_word(relative_element_word(rrs, f.b, f.u), relative_element_word(rrs, f.c, f.w));
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

json commutators_json(const RelativeRootSystem& rrs, const std::vector<Commutator>& factors) {
  json out = json::array();
  auto coords = [](const std::vector<Poly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
  };
  for (const auto& f : factors)
    out.push_back({{"B", rrs.rel_root(f.b)}, {"u", coords(f.u)}, {"C", rrs.rel_root(f.c)}, {"w", coords(f.w)}});
  return out;
}

VerificationCase make_case(std::string id, std::string spec, json params) {
  VerificationCase c;
  c.id = std::move(id);
  c.spec = std::move(spec);
  c.params = std::move(params);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Decomposition catalog

std::vector<VerificationCase> verify_lemma1_folding(const FoldingSpec& spec) {
  RelativeRootSystem rrs(root_system(spec.type), spec);
  std::vector<VerificationCase> out;
  std::string text = spec.to_string();
  for (int comp = 0; comp < rrs.num_components(); ++comp) {
    auto c = make_case("lemma1/" + text + "/c" + std::to_string(comp), text,
                       {{"component", comp}, {"rank", rrs.component_rank(comp)}});
    if (rrs.component_rank(comp) < 2) {
      c.status = CaseStatus::Skipped;
      c.witness = {{"reason", "rank-1 component"}};
      out.push_back(std::move(c));
      continue;
    }
    json entries = json::array();
    json failures = json::array();
    for (std::size_t a : rrs.component_roots(comp)) {
      try {
        Decomposition d = decompose_relative_root(rrs, a);
        DecompositionCheck chk = check_decomposition(rrs, a, d.b, d.c);
        if (!chk.ok) {
          failures.push_back({{"A", rrs.rel_root(a)}, {"reason", chk.reason}});
          continue;
        }
        entries.push_back({rrs.rel_root(a), rrs.rel_root(d.b), rrs.rel_root(d.c), d.method});
      } catch (const Error& e) {
        failures.push_back({{"A", rrs.rel_root(a)}, {"reason", e.what()}});
      }
    }
    c.status = failures.empty() ? CaseStatus::Pass : CaseStatus::Fail;
    c.witness = {{"decompositions", entries}};
    if (!failures.empty()) c.witness["failures"] = failures;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> verify_lemma1_type(const RootType& type) {
  auto rs = root_system(type);
  std::vector<VerificationCase> out;
  for (const auto& gamma : automorphism_subgroups(*rs)) {
    for (unsigned mask = 1; mask < (1u << type.rank); ++mask) {
      std::vector<int> levi;
      for (int i = 0; i < type.rank; ++i)
        if (mask >> i & 1) levi.push_back(i);
      bool invariant = std::all_of(gamma.begin(), gamma.end(), [&](const Perm& p) {
        return std::all_of(levi.begin(), levi.end(), [&](int n) { return mask >> p[n] & 1; });
      });
      if (!invariant) continue;
      auto cases = verify_lemma1_folding(FoldingSpec(type, gamma, levi));
      for (auto& c : cases) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<VerificationCase> verify_lemma1_catalog(int max_rank) {
  if (max_rank < 1 || max_rank > 8) throw InvalidArgument("catalog rank must be in 1..8");
  std::vector<VerificationCase> out;
  for (const auto& t : irreducible_types(max_rank)) {
    auto cases = verify_lemma1_type(t);
    for (auto& c : cases) out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// C2

const std::array<const char*, 4> kC2LongSlots = {"g1.s", "g1.t", "g2.s", "g2.u"};
const std::array<const char*, 3> kC2ShortSlots = {"g1.s", "g1.t", "x"};

namespace {

std::pair<Word<Poly>, Word<Poly>> c2_long_words(const Rank2& c, int k, const EpsBinding& eps, const Signs& s) {
  const auto& reg = c.reg;
  Poly v = Poly::var(reg, "v"), e = Poly::var(reg, "eps"), d = Poly::localizer_inverse(reg);
  std::size_t a1 = c.root(1, 0), a2 = c.root(0, 1), a12 = c.root(1, 1), a112 = c.root(2, 1);
  std::size_t neg_a2 = c.rs->negate(a2);
  auto g1 = [&](Poly s1, Poly t1) { return commutator_word(x(a1, s1), x(a2, t1)); };
  auto g2 = [&](Poly s2, Poly t2, Poly u2) {
    return commutator_word(x(a2, u2), commutator_word(x(a12, s2), x(neg_a2, t2)));
  };
  Word<Poly> lhs = concat(g1(zpow(reg, 2) * long(s[0]), zpow(reg, k - 4) * e * d * v * long(s[1])),
                          g2(zpow(reg, 1) * long(s[2]), zpow(reg, 1) * e, zpow(reg, k - 4) * d * v * long(s[3])));
  Word<Poly> rhs = x(a112, zpow(reg, k) * v);
  return {bind(lhs, eps), bind(rhs, eps)};
}

std::pair<Word<Poly>, Word<Poly>> c2_short_words(const Rank2& c, int k, const EpsBinding& eps, const Signs& s) {
  const auto& reg = c.reg;
  Poly v = Poly::var(reg, "v");
  std::size_t a1 = c.root(1, 0), a2 = c.root(0, 1), a12 = c.root(1, 1), a112 = c.root(2, 1);
  Word<Poly> lhs = concat(commutator_word(x(a1, zpow(reg, 1) * long(s[0])), x(a2, zpow(reg, k - 1) * v * long(s[1]))),
                          x(a112, zpow(reg, k + 1) * v * long(s[2])));
  return {bind(lhs, eps), bind(x(a12, zpow(reg, k) * v), eps)};
}

}  // namespace

bool c2_long_identity_holds(int k, const EpsBinding& eps, const Signs& signs) {
  if (k < 5) throw PreconditionError("the long C2 identity needs k >= 5");
  check_eps(eps);
  require_signs(signs, 4);
  Rank2 c = rank2('C');
  auto [lhs, rhs] = c2_long_words(c, k, eps, signs);
  return same_product(*c.cb, lhs, rhs, c.reg);
}

bool c2_short_identity_holds(int k, const EpsBinding& eps, const Signs& signs) {
  if (k < 1) throw PreconditionError("k must be positive");
  check_eps(eps);
  require_signs(signs, 3);
  Rank2 c = rank2('C');
  auto [lhs, rhs] = c2_short_words(c, k, eps, signs);
  return same_product(*c.cb, lhs, rhs, c.reg);
}

std::pair<VerificationCase, VerificationCase> verify_C2_identities(int k, const EpsBinding& eps) {
  if (k < 5) throw PreconditionError("the C2 identities need k >= 5");
  check_eps(eps);
  Rank2 c = rank2('C');
  std::string spec = split_spec(RootType('C', 2));
  std::string suffix = "/k=" + std::to_string(k) + "/eps=" + eps_text(eps);
  auto run = [&](const char* name, std::size_t slots, auto words, auto slot_json) {
    auto vc = make_case(std::string("c2/") + name + suffix, spec,
                        {{"k", k}, {"eps", eps_text(eps)}, {"identity", name}});
    vc.status = CaseStatus::Fail;
    vc.witness = {{"reason", "no sign assignment works"}};
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
      Signs s = signs_of(mask, slots);
      auto [lhs, rhs] = words(c, k, eps, s);
      if (same_product(*c.cb, lhs, rhs, c.reg)) {
        vc.status = CaseStatus::Pass;
        vc.witness = {{"signs", slot_json(s)}, {"lhs", word_json(*c.rs, lhs)}, {"rhs", word_json(*c.rs, rhs)}};
        break;
      }
    }
    return vc;
  };
  auto long_case = run("long", 4, c2_long_words, [](const Signs& s) { return signs_json(kC2LongSlots, s); });
  auto short_case = run("short", 3, c2_short_words, [](const Signs& s) { return signs_json(kC2ShortSlots, s); });
  return {long_case, short_case};
}

// ---------------------------------------------------------------------------
// G2

namespace {

const std::array<const char*, 2> kG2LongSlots = {"s", "t"};
const std::array<const char*, 4> kG2ShortSlots = {"a", "b", "c", "e"};

std::pair<Word<Poly>, Word<Poly>> g2_long_words(const Rank2& c, int k, const Signs& s) {
  Poly v = Poly::var(c.reg, "v");
  Word<Poly> lhs = commutator_word(x(c.root(0, 1), zpow(c.reg, 1) * v * long(s[0])),
                                   x(c.root(3, 1), zpow(c.reg, k - 1) * long(s[1])));
  return {lhs, x(c.root(3, 2), zpow(c.reg, k) * v)};
}

Word<Poly> g2_short_lhs(const Rank2& c, int k, const EpsBinding& eps, const Signs& s) {
  const auto& reg = c.reg;
  Poly v = Poly::var(reg, "v"), e = Poly::var(reg, "eps"), d = Poly::localizer_inverse(reg);
  std::size_t a1 = c.root(1, 0), a2 = c.root(0, 1);
  Word<Poly> first = commutator_word(x(a1, zpow(reg, 1) * e * long(s[0])), x(a2, d * zpow(reg, k - 2) * v * long(s[1])));
  Word<Poly> second = commutator_word(x(a1, zpow(reg, 1) * long(s[2])), x(a2, e * d * zpow(reg, k - 2) * v * long(s[3])));
  return bind(concat(inverse_word(first), second), eps);
}

}  // namespace

bool g2_long_identity_holds(int k, const Signs& signs) {
  if (k < 2) throw PreconditionError("the long G2 identity needs k >= 2");
  require_signs(signs, 2);
  Rank2 c = rank2('G');
  auto [lhs, rhs] = g2_long_words(c, k, signs);
  return same_product(*c.cb, lhs, rhs, c.reg);
}

G2ShortOutcome g2_short_identity(int k, const EpsBinding& eps, const Signs& signs) {
  if (k < 3) throw PreconditionError("the short G2 identity needs k >= 3");
  check_eps(eps);
  require_signs(signs, 4);
  Rank2 c = rank2('G');
  Word<Poly> lhs = g2_short_lhs(c, k, eps, signs);
  G2ShortOutcome out;
  out.factors = collect_to_normal_form(*c.cb, lhs);
  std::set<std::size_t> allowed{c.root(2, 1), c.root(3, 1), c.root(3, 2)};
  Poly lead = zpow(c.reg, k) * Poly::var(c.reg, "v");
  bool ok = !out.factors.empty() && out.factors.front().root == c.root(2, 1) && out.factors.front().t == lead;
  for (std::size_t i = 0; i < out.factors.size() && ok; ++i) {
    std::size_t r = out.factors[i].root;
    if (!allowed.count(r)) ok = false;
    if (i > 0 && c.rs->length(r) != RootLength::Long) ok = false;
  }
  out.shape_ok = ok && same_product(*c.cb, lhs, out.factors, c.reg);
  return out;
}

std::pair<VerificationCase, VerificationCase> verify_G2_identities(int k_long, int k_short, const EpsBinding& eps) {
  if (k_long < 2) throw PreconditionError("the long G2 identity needs k >= 2");
  if (k_short < 3) throw PreconditionError("the short G2 identity needs k >= 3");
  check_eps(eps);
  Rank2 c = rank2('G');
  std::string spec = split_spec(RootType('G', 2));

  auto lc = make_case("g2/long/k=" + std::to_string(k_long), spec, {{"k", k_long}, {"identity", "long"}});
  lc.witness = {{"reason", "no sign assignment works"}};
  for (unsigned mask = 0; mask < 4; ++mask) {
    Signs s = signs_of(mask, 2);
    auto [lhs, rhs] = g2_long_words(c, k_long, s);
    if (same_product(*c.cb, lhs, rhs, c.reg)) {
      lc.status = CaseStatus::Pass;
      lc.witness = {{"signs", signs_json(kG2LongSlots, s)}, {"lhs", word_json(*c.rs, lhs)}, {"rhs", word_json(*c.rs, rhs)}};
      break;
    }
  }

  auto sc = make_case("g2/short/k=" + std::to_string(k_short) + "/eps=" + eps_text(eps), spec,
                      {{"k", k_short}, {"eps", eps_text(eps)}, {"identity", "short"}});
  sc.witness = {{"reason", "no sign assignment gives the expected shape"}};
  for (unsigned mask = 0; mask < 16; ++mask) {
    Signs s = signs_of(mask, 4);
    G2ShortOutcome o = g2_short_identity(k_short, eps, s);
    if (!o.shape_ok) continue;
    // Compare the trailing coefficients with (eps+1) Z^{k+1} v and eps d Z^{2k+1} v up to sign.
    Poly v = Poly::var(c.reg, "v"), e = Poly::var(c.reg, "eps"), d = Poly::localizer_inverse(c.reg);
    Word<Poly> shown = bind({{c.root(3, 1), (e + Poly::constant(c.reg, 1)) * zpow(c.reg, k_short + 1) * v},
                             {c.root(3, 2), e * d * zpow(c.reg, 2 * k_short + 1) * v}},
                            eps);
    json matches = json::object();
    for (const auto& target : shown) {
      auto it = std::find_if(o.factors.begin(), o.factors.end(), [&](const auto& l) { return l.root == target.root; });
      Poly got = it == o.factors.end() ? Poly::constant(c.reg, 0) : it->t;
      matches[coords_to_string(c.rs->root(target.root))] = got == target.t || got == -target.t;
    }
    json lengths = json::array();
    for (const auto& l : o.factors) lengths.push_back(to_string(c.rs->length(l.root)));
    sc.status = CaseStatus::Pass;
    sc.witness = {{"signs", signs_json(kG2ShortSlots, s)},
                  {"lhs", word_json(*c.rs, g2_short_lhs(c, k_short, eps, s))},
                  {"normalForm", word_json(*c.rs, o.factors)},
                  {"lengths", lengths},
                  {"trailingMatchesDisplayed", matches}};
    break;
  }
  return {lc, sc};
}

VerificationCase verify_G2_expansion() {
  RootType t('G', 2);
  auto rs = root_system(t);
  auto cb = chevalley_basis(t);
  auto reg = VarRegistry::make({"s", "t"});
  Poly s = Poly::var(reg, "s"), tt = Poly::var(reg, "t");
  auto nf = collect_to_normal_form(*cb, commutator_word(x(rs->simple(0), s), x(rs->simple(1), tt)));
  std::vector<std::pair<Coords, Poly>> expected = {
      {{1, 1}, s * tt}, {{2, 1}, s.pow(2) * tt}, {{3, 1}, s.pow(3) * tt}, {{3, 2}, s.pow(3) * tt.pow(2)}};
  auto vc = make_case("g2/expansion", split_spec(t), {{"identity", "commutator expansion"}, {"order", "increasing height"}});
  bool monomials = nf.size() == expected.size();
  bool units = true;
  json coeffs = json::array();
  for (std::size_t i = 0; monomials && i < nf.size(); ++i) {
    const auto& terms = nf[i].t.terms();
    monomials = rs->root(nf[i].root) == expected[i].first && terms.size() == 1 &&
                terms[0].mono == expected[i].second.terms()[0].mono;
    if (!monomials) break;
    coeffs.push_back(terms[0].coeff.get_str());
    units = units && (terms[0].coeff == 1 || terms[0].coeff == -1);
  }
  vc.status = monomials ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"normalForm", word_json(*rs, nf)}, {"coefficients", coeffs}, {"unitCoefficients", units}};
  return vc;
}

// ---------------------------------------------------------------------------
// Case schemas

const char* to_string(CaseSchema s) {
  switch (s) {
    case CaseSchema::F4Long: return "F4_long";
    case CaseSchema::BlPairs: return "Bl_pairs";
    case CaseSchema::ClBC2: return "Cl_BC2";
    case CaseSchema::ClC2: return "Cl_C2";
  }
  return "";
}

CaseSchema case_schema_from_string(const std::string& s) {
  for (auto c : {CaseSchema::F4Long, CaseSchema::BlPairs, CaseSchema::ClBC2, CaseSchema::ClC2})
    if (s == to_string(c)) return c;
  throw InvalidArgument("unknown case schema: " + s);
}

namespace {

VerificationCase f4_long_case(int k) {
  RootType t('F', 4);
  auto rs = root_system(t);
  auto cb = chevalley_basis(t);
  auto reg = VarRegistry::make({"Z", "v"});
  Poly v = Poly::var(reg, "v");
  auto vc = make_case("cases/F4_long/k=" + std::to_string(k), split_spec(t), {{"k", k}, {"schema", "F4_long"}});
  json entries = json::array(), failures = json::array();
  int long_roots = 0;
  for (std::size_t a = 0; a < rs->size(); ++a) {
    if (rs->length(a) != RootLength::Long) continue;
    ++long_roots;
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t b = 0; b < rs->size() && !pick; ++b) {
      if (rs->length(b) != RootLength::Long) continue;
      for (std::size_t c = 0; c < rs->size() && !pick; ++c) {
        if (rs->length(c) != RootLength::Long || rs->sum(b, c) != a) continue;
        bool single = true;
        for (int i = 1; i <= 3 && single; ++i)
          for (int j = 1; j <= 3 && single; ++j) {
            if (i == 1 && j == 1) continue;
            Coords s(t.rank);
            for (int n = 0; n < t.rank; ++n) s[n] = i * rs->root(b)[n] + j * rs->root(c)[n];
            if (rs->index_of(s)) single = false;
          }
        if (single) pick = {b, c};
      }
    }
    if (!pick) {
      failures.push_back({{"A", rs->root(a)}, {"reason", "no long pair"}});
      continue;
    }
    auto [b, c] = *pick;
    int n = cb->structure_constant(b, c);
    Word<Poly> lhs = commutator_word(x(b, zpow(reg, 1)), x(c, zpow(reg, k - 1) * v * long(n)));
    if (std::abs(n) != 1 || !same_product(*cb, lhs, x(a, zpow(reg, k) * v), reg)) {
      failures.push_back({{"A", rs->root(a)}, {"reason", "identity fails"}});
      continue;
    }
    entries.push_back({rs->root(a), rs->root(b), rs->root(c), n});
  }
  vc.status = failures.empty() && long_roots == 24 ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"longRoots", long_roots}, {"triples", entries}};
  if (!failures.empty()) vc.witness["failures"] = failures;
  return vc;
}

VerificationCase bl_pairs_case(int l) {
  RootType t('B', l);
  auto rs = root_system(t);
  FoldingSpec spec(t, {}, {0, 1});
  RelativeRootSystem rrs(rs, spec);
  auto vc = make_case("cases/Bl_pairs/l=" + std::to_string(l), spec.to_string(), {{"l", l}, {"schema", "Bl_pairs"}});
  json entries = json::array(), failures = json::array();
  for (std::size_t a = 0; a < rrs.size(); ++a)
    for (std::size_t b = 0; b < rrs.size(); ++b) {
      Coords cc = rrs.rel_root(a);
      for (std::size_t n = 0; n < cc.size(); ++n) cc[n] -= rrs.rel_root(b)[n];
      auto c = rrs.index_of(cc);
      if (!c) continue;
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      for (auto beta : rrs.fiber(b)) {
        if (rs->length(beta) != RootLength::Long) continue;
        for (auto gamma : rrs.fiber(*c))
          if (rs->length(gamma) == RootLength::Long && rs->sum(beta, gamma)) {
            hit = {beta, gamma};
            break;
          }
        if (hit) break;
      }
      if (!hit) {
        failures.push_back({rrs.rel_root(a), rrs.rel_root(b), rrs.rel_root(*c)});
        continue;
      }
      entries.push_back({rrs.rel_root(a), rrs.rel_root(b), rrs.rel_root(*c), rs->root(hit->first), rs->root(hit->second)});
    }
  vc.status = failures.empty() && !entries.empty() ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"triples", entries}};
  if (!failures.empty()) vc.witness["failures"] = failures;
  return vc;
}

enum class RelLength { ExtraShort, Short, Long };

RelLength relative_length(const RelativeRootSystem& rrs, std::size_t a) {
  Coords twice = rrs.rel_root(a);
  for (auto& x : twice) x *= 2;
  if (rrs.index_of(twice)) return RelLength::ExtraShort;
  Coords half = rrs.rel_root(a);
  bool even = std::all_of(half.begin(), half.end(), [](int x) { return x % 2 == 0; });
  for (auto& x : half) x /= 2;
  if (even && rrs.index_of(half)) return RelLength::Long;
  return RelLength::Short;
}

std::vector<Poly> symbolic_vector(const RegistryPtr& reg, std::size_t n) {
  std::vector<Poly> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Poly::var(reg, "v" + std::to_string(i + 1)));
  return v;
}

RegistryPtr z_v_registry(std::size_t n) {
  std::vector<std::string> names{"Z"};
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return VarRegistry::make(names);
}

// Finds (x, y) with coefficient of u_x^i v_y in coordinate k of the map a unit.
std::optional<std::tuple<std::size_t, std::size_t, Rational>> unit_pair(const NMapEntry& e, std::size_t k, std::size_t m,
                                                                        std::size_t n, unsigned i,
                                                                        const std::function<bool(std::size_t, std::size_t)>& accept) {
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!accept(x, y)) continue;
      Rational c = coefficient(e, k, {{x, i}, {m + y, 1}});
      if (is_unit(c)) return std::make_tuple(x, y, c);
    }
  return std::nullopt;
}

VerificationCase cl_bc2_case(int l, int k) {
  RootType t('C', l);
  auto rs = root_system(t);
  auto cb = chevalley_basis(t);
  FoldingSpec spec(t, {}, {0, 1});
  RelativeRootSystem rrs(rs, spec);
  auto vc = make_case("cases/Cl_BC2/l=" + std::to_string(l) + "/k=" + std::to_string(k), spec.to_string(),
                      {{"l", l}, {"k", k}, {"schema", "Cl_BC2"}});
  json failures = json::array();

  // Fibers of extra-short and short relative roots consist of short roots.
  int checked = 0;
  for (std::size_t a = 0; a < rrs.size(); ++a) {
    if (relative_length(rrs, a) == RelLength::Long) continue;
    ++checked;
    for (auto r : rrs.fiber(a))
      if (rs->length(r) != RootLength::Short) failures.push_back({{"A", rrs.rel_root(a)}, {"reason", "long root in fiber"}});
  }
  std::size_t p = *rrs.index_of({1, 0}), q = *rrs.index_of({0, 1});
  std::size_t a1 = relative_length(rrs, p) == RelLength::Short ? p : q;
  std::size_t a2 = a1 == p ? q : p;
  auto comb = [&](int i, int j) {
    Coords c(2);
    for (int n = 0; n < 2; ++n) c[n] = i * rrs.rel_root(a1)[n] + j * rrs.rel_root(a2)[n];
    return *rrs.index_of(c);
  };
  std::size_t target = comb(2, 2), two_a2 = comb(0, 2), mid = comb(1, 2), a12 = comb(1, 1);

  std::size_t dim = rrs.fiber(target).size();
  RegistryPtr reg = z_v_registry(dim);
  auto v = symbolic_vector(reg, dim);
  Poly zero = Poly::constant(reg, 0);
  std::vector<Commutator> factors;

  NMapTable first = compute_relative_commutator_maps(rrs, *cb, a1, two_a2, false);
  const NMapEntry* n21 = first.find(2, 1);
  const NMapEntry* n11 = first.find(1, 1);
  std::size_t m1 = rrs.fiber(a1).size(), n1 = rrs.fiber(two_a2).size();
  std::vector<Poly> corr(rrs.fiber(mid).size(), zero);
  for (std::size_t g = 0; g < dim && n21 && n11; ++g) {
    auto hit = unit_pair(*n21, g, m1, n1, 2, [](std::size_t, std::size_t) { return true; });
    if (!hit) {
      failures.push_back({{"gamma", rs->root(rrs.fiber(target)[g])}, {"reason", "no unit in the (2,1) map"}});
      continue;
    }
    auto [xi, yi, c] = *hit;
    Poly tcoef = v[g] * c;
    factors.push_back({a1, basis_coords(reg, m1, xi, zpow(reg, 1)), two_a2,
                       basis_coords(reg, n1, yi, zpow(reg, k - 2) * tcoef)});
    for (std::size_t r = 0; r < corr.size(); ++r) corr[r] -= tcoef * coefficient(*n11, r, {{xi, 1}, {m1 + yi, 1}});
  }
  NMapTable second = compute_relative_commutator_maps(rrs, *cb, a12, a2, false);
  const NMapEntry* m11 = second.find(1, 1);
  std::size_t m2 = rrs.fiber(a12).size(), n2 = rrs.fiber(a2).size();
  for (std::size_t r = 0; r < corr.size(); ++r) {
    if (corr[r].is_zero()) continue;
    auto hit = m11 ? unit_pair(*m11, r, m2, n2, 1, [](std::size_t, std::size_t) { return true; }) : std::nullopt;
    if (!hit) {
      failures.push_back({{"gamma", rs->root(rrs.fiber(mid)[r])}, {"reason", "no unit in the (1,1) map"}});
      continue;
    }
    auto [xi, yi, c] = *hit;
    factors.push_back({a12, basis_coords(reg, m2, xi, zpow(reg, 1)), a2,
                       basis_coords(reg, n2, yi, zpow(reg, k - 3) * zpow(reg, 1) * corr[r] * c)});
  }
  std::vector<Poly> rhs_coords;
  for (const auto& x : v) rhs_coords.push_back(zpow(reg, k) * x);
  bool equal = failures.empty() &&
               same_product(*cb, commutators_word(rrs, factors), relative_element_word(rrs, target, rhs_coords), reg);
  vc.status = equal && checked > 0 ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"A", rrs.rel_root(target)}, {"shortFibersChecked", checked}, {"factors", commutators_json(rrs, factors)}};
  if (!failures.empty()) vc.witness["failures"] = failures;
  return vc;
}

std::vector<VerificationCase> cl_c2_cases(int l, int k) {
  RootType t('C', l);
  auto rs = root_system(t);
  auto cb = chevalley_basis(t);
  FoldingSpec spec(t, {}, {l / 2 - 1, l - 1});
  RelativeRootSystem rrs(rs, spec);
  std::size_t a1 = *rrs.index_of({1, 0}), a2 = *rrs.index_of({0, 1});
  std::size_t s1 = *rrs.index_of({1, 1}), s2 = *rrs.index_of({2, 1});
  NMapTable t12 = compute_relative_commutator_maps(rrs, *cb, a1, a2, false);
  NMapTable t13 = compute_relative_commutator_maps(rrs, *cb, a1, s1, false);
  const NMapEntry* n11 = t12.find(1, 1);
  const NMapEntry* n21 = t12.find(2, 1);
  const NMapEntry* m11 = t13.find(1, 1);
  std::size_t m = rrs.fiber(a1).size(), n = rrs.fiber(a2).size(), d1 = rrs.fiber(s1).size(), d2 = rrs.fiber(s2).size();
  std::size_t alpha_l = rs->simple(l - 1);

  // Pairs whose commutator lands in A1+A2 only.
  auto pure = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < d2; ++r)
      if (sgn(coefficient(*n21, r, {{x, 2}, {m + y, 1}})) != 0) return false;
    return true;
  };
  std::vector<VerificationCase> out;
  std::string sfx = "/l=" + std::to_string(l) + "/k=" + std::to_string(k);

  // Short relative root A1 + A2.
  {
    auto vc = make_case("cases/Cl_C2/short" + sfx, spec.to_string(),
                        {{"l", l}, {"k", k}, {"schema", "Cl_C2"}, {"target", "A1+A2"}});
    RegistryPtr reg = z_v_registry(d1);
    auto v = symbolic_vector(reg, d1);
    std::vector<Commutator> factors;
    json failures = json::array();
    for (std::size_t g = 0; g < d1; ++g) {
      auto hit = unit_pair(*n11, g, m, n, 1, pure);
      if (!hit) {
        failures.push_back({{"gamma", rs->root(rrs.fiber(s1)[g])}});
        continue;
      }
      auto [xi, yi, c] = *hit;
      factors.push_back({a1, basis_coords(reg, m, xi, zpow(reg, 1)), a2,
                         basis_coords(reg, n, yi, zpow(reg, k - 1) * v[g] * c)});
    }
    std::vector<Poly> rhs;
    for (const auto& x : v) rhs.push_back(zpow(reg, k) * x);
    bool ok = failures.empty() &&
              same_product(*cb, commutators_word(rrs, factors), relative_element_word(rrs, s1, rhs), reg);
    vc.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
    vc.witness = {{"A", rrs.rel_root(s1)}, {"factors", commutators_json(rrs, factors)}};
    if (!failures.empty()) vc.witness["failures"] = failures;
    out.push_back(std::move(vc));
  }

  // Long relative root 2A1 + A2.
  {
    auto vc = make_case("cases/Cl_C2/long" + sfx, spec.to_string(),
                        {{"l", l},
                         {"k", k},
                         {"schema", "Cl_C2"},
                         {"target", "2A1+A2"},
                         {"note", "target taken as A = 2A1+A2 where the source text names C"}});
    RegistryPtr reg = z_v_registry(d2);
    auto v = symbolic_vector(reg, d2);
    Poly zero = Poly::constant(reg, 0);
    std::vector<Commutator> via_sum, via_simple;
    std::vector<Poly> corr(d1, zero);
    json failures = json::array(), cases = json::array();
    for (std::size_t g = 0; g < d2; ++g) {
      std::size_t gamma = rrs.fiber(s2)[g];
      if (rs->length(gamma) == RootLength::Short) {
        auto hit = unit_pair(*m11, g, m, d1, 1, [](std::size_t, std::size_t) { return true; });
        if (!hit) {
          failures.push_back({{"gamma", rs->root(gamma)}});
          continue;
        }
        auto [xi, yi, c] = *hit;
        via_sum.push_back({a1, basis_coords(reg, m, xi, zpow(reg, 1)), s1,
                           basis_coords(reg, d1, yi, zpow(reg, k - 1) * v[g] * c)});
        cases.push_back({{"gamma", rs->root(gamma)}, {"case", "short"}});
      } else {
        auto hit = unit_pair(*n21, g, m, n, 2,
                             [&](std::size_t, std::size_t y) { return rrs.fiber(a2)[y] != alpha_l; });
        if (!hit) {
          failures.push_back({{"gamma", rs->root(gamma)}});
          continue;
        }
        auto [xi, yi, c] = *hit;
        Poly tcoef = v[g] * c;
        via_simple.push_back({a1, basis_coords(reg, m, xi, zpow(reg, 1)), a2,
                              basis_coords(reg, n, yi, zpow(reg, k - 2) * tcoef)});
        for (std::size_t r = 0; r < d1; ++r) corr[r] -= tcoef * coefficient(*n11, r, {{xi, 1}, {m + yi, 1}});
        cases.push_back({{"gamma", rs->root(gamma)}, {"case", "long"}});
      }
    }
    for (std::size_t r = 0; r < d1; ++r) {
      if (corr[r].is_zero()) continue;
      auto hit = unit_pair(*n11, r, m, n, 1, pure);
      if (!hit) {
        failures.push_back({{"gamma", rs->root(rrs.fiber(s1)[r])}, {"reason", "no correction pair"}});
        continue;
      }
      auto [xi, yi, c] = *hit;
      via_simple.push_back({a1, basis_coords(reg, m, xi, zpow(reg, 1)), a2,
                            basis_coords(reg, n, yi, zpow(reg, k - 2) * corr[r] * c)});
    }
    std::vector<Commutator> factors = via_sum;
    factors.insert(factors.end(), via_simple.begin(), via_simple.end());
    std::vector<Poly> rhs;
    for (const auto& x : v) rhs.push_back(zpow(reg, k) * x);
    bool ok = failures.empty() &&
              same_product(*cb, commutators_word(rrs, factors), relative_element_word(rrs, s2, rhs), reg);
    vc.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
    vc.witness = {{"A", rrs.rel_root(s2)}, {"roots", cases}, {"factors", commutators_json(rrs, factors)}};
    if (!failures.empty()) vc.witness["failures"] = failures;
    out.push_back(std::move(vc));
  }
  return out;
}

}  // namespace

std::vector<VerificationCase> verify_case_schemas(CaseSchema schema, int l, int k) {
  switch (schema) {
    case CaseSchema::F4Long:
      if (k == 0) k = 2;
      if (k < 2) throw PreconditionError("F4_long needs k >= 2");
      return {f4_long_case(k)};
    case CaseSchema::BlPairs:
      if (l < 3) throw PreconditionError("Bl_pairs needs l >= 3");
      return {bl_pairs_case(l)};
    case CaseSchema::ClBC2:
      if (l < 3) throw PreconditionError("Cl_BC2 needs l >= 3");
      if (k == 0) k = 4;
      if (k < 4) throw PreconditionError("Cl_BC2 needs k >= 4");
      return {cl_bc2_case(l, k)};
    case CaseSchema::ClC2:
      if (l < 4 || l % 2) throw PreconditionError("Cl_C2 needs even l >= 4");
      if (k == 0) k = 3;
      if (k < 3) throw PreconditionError("Cl_C2 needs k >= 3");
      return cl_c2_cases(l, k);
  }
  throw InvalidArgument("unknown case schema");
}

// ---------------------------------------------------------------------------
// Catalog suites

VerificationCase verify_commutator_maps_type(const RootType& t) {
  auto rs = root_system(t);
  auto cb = chevalley_basis(t);
  auto vc = make_case("eq1/" + t.name(), t.name(), {{"gamma", "trivial"}, {"levi", "every nonempty subset"}});
  long pairs = 0, foldings = 0;
  json failures = json::array();
  for (unsigned mask = 1; mask < (1u << t.rank); ++mask) {
    std::vector<int> levi;
    for (int i = 0; i < t.rank; ++i)
      if (mask >> i & 1) levi.push_back(i);
    RelativeRootSystem rrs(rs, FoldingSpec(t, {}, levi));
    ++foldings;
    for (std::size_t a = 0; a < rrs.size(); ++a)
      for (std::size_t b = 0; b < rrs.size(); ++b) {
        if (opposite_collinear(rrs.rel_root(a), rrs.rel_root(b))) continue;
        ++pairs;
        try {
          if (!compute_relative_commutator_maps(rrs, *cb, a, b, true).verified) throw InternalError("not verified");
        } catch (const Error& e) {
          failures.push_back({{"spec", rrs.spec().to_string()}, {"A", rrs.rel_root(a)}, {"B", rrs.rel_root(b)},
                              {"reason", e.what()}});
        }
      }
  }
  vc.status = failures.empty() ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"foldings", foldings}, {"pairs", pairs}};
  if (!failures.empty()) vc.witness["failures"] = failures;
  return vc;
}

std::vector<VerificationCase> verify_commutator_maps_catalog(int max_rank) {
  std::vector<VerificationCase> out;
  for (const auto& t : irreducible_types(max_rank)) out.push_back(verify_commutator_maps_type(t));
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> lemma2_pairs(const RelativeRootSystem& rrs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rrs.size(); ++a)
    for (std::size_t b = 0; b < rrs.size(); ++b) {
      const Coords& A = rrs.rel_root(a);
      const Coords& B = rrs.rel_root(b);
      if (opposite_collinear(A, B)) continue;
      Coords s = A;
      for (std::size_t n = 0; n < s.size(); ++n) s[n] += B[n];
      if (rrs.index_of(s)) out.push_back({a, b});
    }
  return out;
}

// Aggregates surjectivity checks of one case over every pair where its hypothesis holds.
std::optional<VerificationCase> surjectivity_case(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, SurjectivityCase which) {
  std::string spec = rrs.spec().to_string();
  auto vc = make_case(std::string("lemma2/") + to_char(which) + "/" + spec, spec,
                      {{"case", std::string(1, to_char(which))}});
  long checked = 0;
  std::int64_t max_c = 0;
  json failures = json::array();
  for (auto [a, b] : lemma2_pairs(rrs)) {
    auto cases = applicable_surjectivity_cases(rrs, cb, a, b);
    if (std::find(cases.begin(), cases.end(), which) == cases.end()) continue;
    ++checked;
    auto rep = check_N11_surjectivity(rrs, cb, a, b, which);
    max_c = std::max(max_c, rep.max_coefficient);
    if (!rep.pass) failures.push_back({{"A", rrs.rel_root(a)}, {"B", rrs.rel_root(b)}, {"witness", rep.witness}});
  }
  if (checked == 0) return std::nullopt;
  vc.status = failures.empty() ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"pairs", checked}, {"maxCoefficient", max_c}};
  if (!failures.empty()) vc.witness["failures"] = failures;
  return vc;
}

VerificationCase spanning_case(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::uint64_t seed) {
  std::string spec = rrs.spec().to_string();
  auto vc = make_case("lemma2/span/" + spec, spec, {{"seed", seed}});
  long checked = 0, vacuous = 0;
  json failures = json::array();
  for (auto [a, b] : lemma2_pairs(rrs)) {
    auto rep = check_spanning_lemma2_2(rrs, cb, a, b, seed);
    if (rep.vacuous) {
      ++vacuous;
      continue;
    }
    ++checked;
    if (!rep.pass)
      failures.push_back({{"A", rrs.rel_root(a)}, {"B", rrs.rel_root(b)}, {"fields", rep.fields}});
  }
  vc.status = failures.empty() ? CaseStatus::Pass : CaseStatus::Fail;
  vc.witness = {{"pairs", checked}, {"vacuousPairs", vacuous}, {"vacuous", checked == 0}};
  if (!failures.empty()) vc.witness["failures"] = failures;
  return vc;
}

}  // namespace

std::vector<VerificationCase> verify_lemma2_suite(int simply_laced_max_rank, std::uint64_t seed) {
  std::vector<VerificationCase> out;
  for (const auto& t : irreducible_types(simply_laced_max_rank)) {
    if (!t.simply_laced()) continue;
    auto rs = root_system(t);
    auto cb = chevalley_basis(t);
    for (unsigned mask = 1; mask < (1u << t.rank); ++mask) {
      std::vector<int> levi;
      for (int i = 0; i < t.rank; ++i)
        if (mask >> i & 1) levi.push_back(i);
      RelativeRootSystem rrs(rs, FoldingSpec(t, {}, levi));
      if (auto c = surjectivity_case(rrs, *cb, SurjectivityCase::A)) out.push_back(std::move(*c));
    }
  }

  const char* doubly_laced[] = {"B3 gamma=trivial levi=1,2", "B4 gamma=trivial levi=1,2", "C3 gamma=trivial levi=1,2",
                                "C4 gamma=trivial levi=1,2", "C4 gamma=trivial levi=2,4", "B2 gamma=trivial levi=all",
                                "C3 gamma=trivial levi=all", "F4 gamma=trivial levi=all"};
  for (const char* text : doubly_laced) {
    FoldingSpec spec = FoldingSpec::parse(text);
    RelativeRootSystem rrs(root_system(spec.type), spec);
    auto cb = chevalley_basis(spec.type);
    for (auto which : {SurjectivityCase::B, SurjectivityCase::C, SurjectivityCase::D})
      if (auto c = surjectivity_case(rrs, *cb, which)) out.push_back(std::move(*c));
    out.push_back(spanning_case(rrs, *cb, seed));
  }
  {
    FoldingSpec spec = FoldingSpec::parse("A3 gamma=trivial levi=all");
    RelativeRootSystem rrs(root_system(spec.type), spec);
    out.push_back(spanning_case(rrs, *chevalley_basis(spec.type), seed));
  }

  // The C2 pair (A1, A1+A2) has N = +-2 and lies outside every case.
  {
    FoldingSpec spec = FoldingSpec::parse("C2 gamma=trivial levi=all");
    RelativeRootSystem rrs(root_system(spec.type), spec);
    auto cb = chevalley_basis(spec.type);
    std::size_t a = *rrs.index_of({1, 0}), b = *rrs.index_of({1, 1});
    auto cases = applicable_surjectivity_cases(rrs, *cb, a, b);
    std::int64_t max_c = 0;
    for (const auto& c : n11_coefficients(rrs, *cb, a, b)) max_c = std::max(max_c, std::abs(c.c));
    auto vc = make_case("lemma2/outside/" + spec.to_string(), spec.to_string(), {{"A", Coords{1, 0}}, {"B", Coords{1, 1}}});
    vc.status = cases.empty() && max_c == 2 ? CaseStatus::Pass : CaseStatus::Fail;
    json names = json::array();
    for (auto c : cases) names.push_back(std::string(1, to_char(c)));
    vc.witness = {{"applicableCases", names}, {"maxCoefficient", max_c}};
    out.push_back(std::move(vc));
  }
  return out;
}

std::vector<VerificationCase> verify_lemma3_suite(std::uint64_t seed) {
  std::vector<VerificationCase> out;
  for (int l : {4, 6}) {
    auto rep = check_spanning_lemma3(l, seed);
    FoldingSpec spec(RootType('C', l), {}, {l / 2 - 1, l - 1});
    auto vc = make_case("lemma3/C" + std::to_string(l), spec.to_string(), {{"l", l}, {"seed", seed}});
    vc.status = rep.pass ? CaseStatus::Pass : CaseStatus::Fail;
    vc.witness = {{"fields", rep.fields}, {"roots", rep.witness}};
    out.push_back(std::move(vc));
  }
  return out;
}

}  // namespace relroot
