#include "relroot/folding.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "relroot/error.hpp"

namespace relroot {

namespace {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

bool preserves(const std::vector<std::vector<int>>& g, const Perm& p) {
  int n = int(g.size());
  if (int(p.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g[p[i]][p[j]] != g[i][j]) return false;
  return true;
}

void automorphisms_rec(const std::vector<std::vector<int>>& g, Perm& p, std::vector<bool>& used, int i,
                       std::vector<Perm>& out) {
  int n = int(g.size());
  if (i == n) {
    out.push_back(p);
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (used[x] || g[x][x] != g[i][i]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = g[x][p[j]] == g[i][j];
    if (!ok) continue;
    p[i] = x;
    used[x] = true;
    automorphisms_rec(g, p, used, i + 1, out);
    used[x] = false;
  }
}

std::vector<Perm> automorphisms_of(const RootType& t) {
  auto g = RootSystem::gram_of(t);
  std::vector<Perm> out;
  Perm p(t.rank);
  std::vector<bool> used(t.rank, false);
  automorphisms_rec(g, p, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Perm> standard_flip(const RootType& t) {
  int l = t.rank;
  Perm p = identity_perm(l);
  if (t.series == 'A' && l >= 2) {
    std::reverse(p.begin(), p.end());
  } else if (t.series == 'D') {
    std::swap(p[l - 2], p[l - 1]);
  } else if (t.series == 'E' && l == 6) {
    p = {5, 1, 4, 3, 2, 0};
  } else {
    return std::nullopt;
  }
  return p;
}

std::string perm_text(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i] + 1);
  }
  return s;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("not an integer: " + std::string(s));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int level_of(const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); }

Coords negated(Coords c) {
  for (auto& x : c) x = -x;
  return c;
}

}  // namespace

std::vector<Perm> diagram_automorphisms(const RootSystem& rs) { return automorphisms_of(rs.type()); }

std::vector<Perm> generate_group(const std::vector<Perm>& gens, int nodes) {
  std::set<Perm> seen{identity_perm(nodes)};
  std::deque<Perm> queue{identity_perm(nodes)};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      if (int(g.size()) != nodes) throw InvalidArgument("generator has wrong length");
      Perm q = compose(g, p);
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};  // identity is the lexicographic minimum
}

std::vector<std::vector<Perm>> automorphism_subgroups(const RootSystem& rs) {
  auto aut = diagram_automorphisms(rs);
  if (aut.size() > 16) throw InternalError("automorphism group unexpectedly large");
  std::set<std::vector<Perm>> groups;
  for (unsigned mask = 0; mask < (1u << aut.size()); ++mask) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < aut.size(); ++i)
      if (mask >> i & 1) gens.push_back(aut[i]);
    groups.insert(generate_group(gens, rs.rank()));
  }
  std::vector<std::vector<Perm>> out(groups.begin(), groups.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::string gamma_name(const RootSystem& rs, const std::vector<Perm>& group) {
  const RootType& t = rs.type();
  if (group.size() == 1) return "trivial";
  if (t.series == 'D' && t.rank == 4 && group.size() == 6) return "triality";
  if (auto f = standard_flip(t); f && group.size() == 2 && group == generate_group({*f}, t.rank)) return "flip";
  for (const auto& g : group)
    if (generate_group({g}, t.rank) == group) return "perm:" + perm_text(g);
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j)
      if (generate_group({group[i], group[j]}, t.rank) == group)
        return "perm:" + perm_text(group[i]) + "/" + perm_text(group[j]);
  throw InternalError("no generating set found for diagram subgroup");
}

FoldingSpec::FoldingSpec(RootType t, std::vector<Perm> g, std::vector<int> j)
    : type(t), gamma(std::move(g)), levi(std::move(j)) {
  auto gram = RootSystem::gram_of(type);
  if (gamma.empty()) gamma = {identity_perm(type.rank)};
  for (const auto& p : gamma)
    if (!preserves(gram, p)) throw InvalidArgument("gamma element is not a diagram automorphism");
  gamma = generate_group(gamma, type.rank);
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  for (int n : levi)
    if (n < 0 || n >= type.rank) throw InvalidArgument("levi node out of range");
  std::set<int> jset(levi.begin(), levi.end());
  for (const auto& p : gamma)
    for (int n : levi)
      if (!jset.count(p[n])) throw InvalidArgument("levi set is not gamma-invariant");
}

std::vector<Perm> FoldingSpec::parse_gamma(const RootType& type, std::string_view text) {
  int l = type.rank;
  if (text == "trivial" || text.empty()) return {identity_perm(l)};
  if (text == "flip") {
    auto f = standard_flip(type);
    if (!f) throw InvalidArgument("type " + type.name() + " has no flip");
    return generate_group({*f}, l);
  }
  if (text == "triality") {
    if (!(type.series == 'D' && type.rank == 4)) throw InvalidArgument("triality requires D4");
    return automorphisms_of(type);
  }
  if (text.substr(0, 5) == "perm:") {
    std::vector<Perm> gens;
    for (auto part : split(text.substr(5), '/')) {
      Perm p;
      for (auto tok : split(part, ',')) p.push_back(parse_int(tok) - 1);
      if (int(p.size()) != l) throw InvalidArgument("permutation must list " + std::to_string(l) + " images");
      if (!preserves(RootSystem::gram_of(type), p)) throw InvalidArgument("not a diagram automorphism: " + std::string(part));
      gens.push_back(p);
    }
    return generate_group(gens, l);
  }
  throw InvalidArgument("unknown gamma: " + std::string(text));
}

std::vector<int> FoldingSpec::parse_levi(const RootType& type, std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  if (text == "all") {
    for (int i = 0; i < type.rank; ++i) out.push_back(i);
    return out;
  }
  for (auto tok : split(text, ',')) {
    int n = parse_int(tok);
    if (n < 1 || n > type.rank) throw InvalidArgument("levi node out of range: " + std::string(tok));
    out.push_back(n - 1);
  }
  return out;
}

FoldingSpec FoldingSpec::parse(std::string_view text) {
  std::optional<RootType> type;
  std::string gamma = "trivial";
  std::string levi;
  bool have_levi = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok.empty()) continue;
    if (tok.substr(0, 6) == "gamma=") {
      gamma = std::string(tok.substr(6));
    } else if (tok.substr(0, 5) == "levi=") {
      levi = std::string(tok.substr(5));
      have_levi = true;
    } else if (!type) {
      type = RootType::parse(tok);
    } else {
      throw InvalidArgument("unexpected token in folding spec: " + std::string(tok));
    }
  }
  if (!type) throw InvalidArgument("folding spec lacks a type");
  if (!have_levi) throw InvalidArgument("folding spec lacks levi=");
  return FoldingSpec(*type, parse_gamma(*type, gamma), parse_levi(*type, levi));
}

std::string FoldingSpec::to_string() const {
  RootSystem rs(type);
  std::string s = type.name() + " gamma=" + gamma_name(rs, gamma) + " levi=";
  for (std::size_t i = 0; i < levi.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(levi[i] + 1);
  }
  return s;
}

RelativeRootSystem::RelativeRootSystem(std::shared_ptr<const RootSystem> rs, FoldingSpec spec)
    : rs_(std::move(rs)), spec_(std::move(spec)) {
  if (!(rs_->type() == spec_.type)) throw InvalidArgument("root system does not match folding spec");
  int l = rs_->rank();
  std::vector<bool> done(l, false);
  for (int n : spec_.levi) {
    if (done[n]) continue;
    std::set<int> orbit;
    for (const auto& p : spec_.gamma) orbit.insert(p[n]);
    for (int m : orbit) done[m] = true;
    orbits_.push_back({orbit.begin(), orbit.end()});
  }
  proj_.assign(orbits_.size(), std::vector<int>(l, 0));
  for (std::size_t o = 0; o < orbits_.size(); ++o)
    for (int n : orbits_[o]) proj_[o][n] = 1;

  std::map<Coords, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rs_->num_positive(); ++i) {
    Coords c = project(rs_->root(i));
    if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) groups[c].push_back(i);
  }
  std::vector<Coords> pos;
  for (const auto& [c, f] : groups) pos.push_back(c);
  std::sort(pos.begin(), pos.end(), [](const Coords& a, const Coords& b) {
    int la = level_of(a), lb = level_of(b);
    return la != lb ? la < lb : a < b;
  });
  auto by_coords = [&](std::size_t x, std::size_t y) { return rs_->root(x) < rs_->root(y); };
  rel_ = pos;
  for (const auto& c : pos) rel_.push_back(negated(c));
  fibers_.resize(rel_.size());
  root_to_rel_.assign(rs_->size(), -1);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    auto f = groups[pos[i]];
    std::vector<std::size_t> neg;
    for (auto r : f) neg.push_back(rs_->negate(r));
    std::sort(f.begin(), f.end(), by_coords);
    std::sort(neg.begin(), neg.end(), by_coords);
    for (auto r : f) root_to_rel_[r] = int(i);
    for (auto r : neg) root_to_rel_[r] = int(i + pos.size());
    fibers_[i] = std::move(f);
    fibers_[i + pos.size()] = std::move(neg);
  }

  // Components: union of coordinates that occur together in a relative root.
  std::vector<int> parent(orbits_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : pos) {
    int first = -1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k]) continue;
      if (first < 0) first = int(k);
      else parent[find(int(k))] = find(first);
    }
  }
  std::map<int, int> comp_id;
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    int r = find(int(k));
    if (!comp_id.count(r)) {
      comp_id[r] = int(component_coords_.size());
      component_coords_.push_back({});
    }
    component_coords_[comp_id[r]].push_back(int(k));
  }
  components_.resize(component_coords_.size());
  component_of_.assign(rel_.size(), -1);
  for (std::size_t i = 0; i < rel_.size(); ++i) {
    int k = 0;
    while (rel_[i][k] == 0) ++k;
    int c = comp_id[find(k)];
    component_of_[i] = c;
    components_[c].push_back(i);
  }
}

Coords RelativeRootSystem::project(const Coords& c) const {
  Coords out(proj_.size(), 0);
  for (std::size_t o = 0; o < proj_.size(); ++o)
    for (std::size_t n = 0; n < c.size(); ++n) out[o] += proj_[o][n] * c[n];
  return out;
}

std::optional<std::size_t> RelativeRootSystem::index_of(const Coords& c) const {
  auto n = num_positive();
  auto it = std::lower_bound(rel_.begin(), rel_.begin() + n, c, [](const Coords& a, const Coords& b) {
    int la = level_of(a), lb = level_of(b);
    return la != lb ? la < lb : a < b;
  });
  if (it != rel_.begin() + n && *it == c) return std::size_t(it - rel_.begin());
  Coords neg = negated(c);
  it = std::lower_bound(rel_.begin(), rel_.begin() + n, neg, [](const Coords& a, const Coords& b) {
    int la = level_of(a), lb = level_of(b);
    return la != lb ? la < lb : a < b;
  });
  if (it != rel_.begin() + n && *it == neg) return std::size_t(it - rel_.begin()) + n;
  return std::nullopt;
}

int RelativeRootSystem::level(std::size_t i) const { return level_of(rel_.at(i)); }

std::optional<std::size_t> RelativeRootSystem::rel_of_root(std::size_t root) const {
  int r = root_to_rel_.at(root);
  if (r < 0) return std::nullopt;
  return std::size_t(r);
}

// ---------------------------------------------------------------------------
// Type classification

namespace {

struct Candidate {
  std::string series;
  std::set<Coords> roots;
};

std::set<Coords> all_roots(const RootSystem& rs) { return {rs.roots().begin(), rs.roots().end()}; }

std::vector<Candidate> candidates_of_rank(int r) {
  std::vector<Candidate> out;
  if (r == 1) {
    out.push_back({"A", {{1}, {-1}}});
    out.push_back({"BC", {{1}, {-1}, {2}, {-2}}});
    return out;
  }
  out.push_back({"A", all_roots(RootSystem({'A', r}))});
  RootSystem b({'B', r});
  out.push_back({"B", all_roots(b)});
  out.push_back({"C", all_roots(RootSystem({'C', r}))});
  if (r >= 4) out.push_back({"D", all_roots(RootSystem({'D', r}))});
  if (r >= 6 && r <= 8) out.push_back({"E", all_roots(RootSystem({'E', r}))});
  if (r == 4) out.push_back({"F", all_roots(RootSystem({'F', 4}))});
  if (r == 2) out.push_back({"G", all_roots(RootSystem({'G', 2}))});
  Candidate bc{"BC", all_roots(b)};
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.length(i) != RootLength::Short) continue;
    Coords c = b.root(i);
    for (auto& x : c) x *= 2;
    bc.roots.insert(c);
  }
  out.push_back(bc);
  return out;
}

}  // namespace

RelativeType classify_relative_type(const RelativeRootSystem& rrs, int component) {
  const auto& coords = rrs.component_coords(component);
  int r = int(coords.size());
  std::vector<Coords> sub;
  for (auto i : rrs.component_roots(component)) {
    Coords c;
    for (int k : coords) c.push_back(rrs.rel_root(i)[k]);
    sub.push_back(c);
  }
  auto cands = candidates_of_rank(r);
  auto matches = [&](const Candidate& cand, const Perm& p) {
    if (cand.roots.size() != sub.size()) return false;
    Coords m(r);
    for (const auto& c : sub) {
      for (int k = 0; k < r; ++k) m[p[k]] = c[k];
      if (!cand.roots.count(m)) return false;
    }
    return true;
  };
  Perm id = identity_perm(r);
  for (const auto& cand : cands)
    if (matches(cand, id)) return {cand.series, r};
  for (const auto& cand : cands) {
    if (cand.roots.size() != sub.size()) continue;
    Perm p = id;
    while (std::next_permutation(p.begin(), p.end()))
      if (matches(cand, p)) return {cand.series, r};
  }
  throw PreconditionError("relative component matches no root system type");
}

// ---------------------------------------------------------------------------
// Decomposition

bool collinear(const Coords& a, const Coords& b) {
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q)
      if (a[p] * b[q] - a[q] * b[p] != 0) return false;
  return true;
}

std::optional<std::pair<int, int>> solve_in_plane(const Coords& x, const Coords& b, const Coords& c) {
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = p + 1; q < b.size(); ++q) {
      int det = b[p] * c[q] - b[q] * c[p];
      if (det == 0) continue;
      int ni = x[p] * c[q] - x[q] * c[p];
      int nj = b[p] * x[q] - b[q] * x[p];
      if (ni % det || nj % det) return std::nullopt;
      int i = ni / det, j = nj / det;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (i * b[k] + j * c[k] != x[k]) return std::nullopt;
      return std::pair{i, j};
    }
  return std::nullopt;
}

DecompositionCheck check_decomposition(const RelativeRootSystem& rrs, std::size_t a, std::size_t b, std::size_t c) {
  const Coords& A = rrs.rel_root(a);
  const Coords& B = rrs.rel_root(b);
  const Coords& C = rrs.rel_root(c);
  for (std::size_t k = 0; k < A.size(); ++k)
    if (B[k] + C[k] != A[k]) return {false, "B + C differs from A"};
  if (collinear(B, C)) return {false, "B and C are collinear"};
  int lev_a = std::abs(rrs.level(a));
  for (std::size_t x = 0; x < rrs.size(); ++x) {
    auto ij = solve_in_plane(rrs.rel_root(x), B, C);
    if (!ij) continue;
    auto [i, j] = *ij;
    if (i <= 0 || j <= 0 || (i == 1 && j == 1)) continue;
    std::string where = std::to_string(i) + "B+" + std::to_string(j) + "C";
    if (rrs.sign(x) != rrs.sign(a)) return {false, where + " has the wrong sign"};
    if (std::abs(rrs.level(x)) <= lev_a) return {false, where + " does not raise |lev|"};
  }
  return {true, ""};
}

namespace {

// Nodes on the shortest diagram path from `from` to the nearest node of `targets`,
// excluding that nearest node. Empty when unreachable or `from` is a target.
std::vector<int> path_to_set(const RootSystem& rs, int from, const std::vector<bool>& targets) {
  int l = rs.rank();
  std::vector<int> prev(l, -2);
  std::deque<int> queue{from};
  prev[from] = -1;
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    if (targets[n]) {
      std::vector<int> path;
      for (int m = prev[n]; m >= 0; m = prev[m]) path.push_back(m);
      return path;
    }
    for (int m = 0; m < l; ++m)
      if (prev[m] == -2 && rs.adjacent(n, m)) {
        prev[m] = n;
        queue.push_back(m);
      }
  }
  return {};
}

int distance_to_set(const RootSystem& rs, int from, const std::vector<int>& targets) {
  int l = rs.rank();
  std::vector<int> dist(l, -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    if (std::find(targets.begin(), targets.end(), n) != targets.end()) return dist[n];
    for (int m = 0; m < l; ++m)
      if (dist[m] < 0 && rs.adjacent(n, m)) {
        dist[m] = dist[n] + 1;
        queue.push_back(m);
      }
  }
  return l + 1;
}

using Pair = std::pair<std::size_t, std::size_t>;

// Constructive candidates for a positive relative root, following the two
// cases of the existence argument. `widen` admits every J-node of another orbit
// in the first case instead of the nearest ones only.
std::vector<Pair> constructive_candidates(const RelativeRootSystem& rrs, std::size_t a, bool widen) {
  const RootSystem& rs = rrs.roots();
  const Coords& A = rrs.rel_root(a);
  std::vector<Pair> out;
  auto add = [&](const Coords& b, const Coords& c) {
    auto bi = rrs.index_of(b), ci = rrs.index_of(c);
    if (bi && ci) out.push_back({*bi, *ci});
  };
  int nonzero = int(std::count_if(A.begin(), A.end(), [](int x) { return x != 0; }));
  if (nonzero == 1) {
    int o = int(std::find_if(A.begin(), A.end(), [](int x) { return x != 0; }) - A.begin());
    const auto& orbit = rrs.orbits()[o];
    std::vector<int> others;
    for (int n : rrs.spec().levi)
      if (std::find(orbit.begin(), orbit.end(), n) == orbit.end()) others.push_back(n);
    int best = rs.rank() + 1;
    for (int s : others) best = std::min(best, distance_to_set(rs, s, orbit));
    for (std::size_t alpha : rrs.fiber(a)) {
      std::vector<bool> support(rs.rank());
      for (int k = 0; k < rs.rank(); ++k) support[k] = rs.root(alpha)[k] != 0;
      for (int s : others) {
        if (!widen && distance_to_set(rs, s, orbit) != best) continue;
        auto path = path_to_set(rs, s, support);
        if (path.empty()) continue;
        Coords beta(rs.rank(), 0);
        for (int n : path) beta[n] = 1;
        if (!rs.index_of(beta)) continue;
        Coords sum = rs.root(alpha);
        for (int k = 0; k < rs.rank(); ++k) sum[k] += beta[k];
        if (!rs.index_of(sum)) continue;
        add(rrs.project(sum), negated(rrs.project(beta)));
      }
    }
  } else {
    for (std::size_t gamma : rrs.fiber(a))
      for (int n : rrs.spec().levi) {
        Coords rest = rs.root(gamma);
        rest[n] -= 1;
        auto ri = rs.index_of(rest);
        if (!ri || !rs.is_positive(*ri)) continue;
        Coords simple(rs.rank(), 0);
        simple[n] = 1;
        add(rrs.project(rest), rrs.project(simple));
      }
  }
  return out;
}

std::optional<Pair> least_valid(const RelativeRootSystem& rrs, std::size_t a, const std::vector<Pair>& cands) {
  std::optional<Pair> best;
  for (const auto& [b, c] : cands) {
    if (!check_decomposition(rrs, a, b, c).ok) continue;
    if (!best || std::pair(rrs.rel_root(b), rrs.rel_root(c)) <
                     std::pair(rrs.rel_root(best->first), rrs.rel_root(best->second)))
      best = Pair{b, c};
  }
  return best;
}

}  // namespace

Decomposition decompose_relative_root(const RelativeRootSystem& rrs, std::size_t a) {
  if (rrs.component_rank(rrs.component_of(a)) < 2)
    throw PreconditionError("relative root lies in a rank-1 component");
  bool neg = !rrs.is_positive(a);
  std::size_t pa = neg ? rrs.negate(a) : a;
  auto orient = [&](std::vector<Pair> cands) {
    if (neg)
      for (auto& [b, c] : cands) {
        b = rrs.negate(b);
        c = rrs.negate(c);
      }
    return cands;
  };
  const Coords& A = rrs.rel_root(pa);
  bool multiple = std::count_if(A.begin(), A.end(), [](int x) { return x != 0; }) == 1;
  if (auto best = least_valid(rrs, a, orient(constructive_candidates(rrs, pa, false))))
    return {best->first, best->second, multiple ? "multiple-of-simple" : "chain-split"};
  if (multiple)
    if (auto best = least_valid(rrs, a, orient(constructive_candidates(rrs, pa, true))))
      return {best->first, best->second, "widened"};
  std::vector<Pair> all;
  for (std::size_t b = 0; b < rrs.size(); ++b) {
    Coords c = rrs.rel_root(a);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= rrs.rel_root(b)[k];
    if (auto ci = rrs.index_of(c)) all.push_back({b, *ci});
  }
  if (auto best = least_valid(rrs, a, all)) return {best->first, best->second, "exhaustive"};
  throw InternalError("no decomposition found for relative root " + coords_to_string(rrs.rel_root(a)));
}

}  // namespace relroot
