#include "relroot/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "relroot/error.hpp"

namespace relroot {

RootType::RootType(char s, int r) : series(char(std::toupper(static_cast<unsigned char>(s)))), rank(r) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: throw InvalidArgument(std::string("unknown series: ") + s);
  }
  if (!ok) throw InvalidArgument("invalid rank " + std::to_string(rank) + " for series " + series);
}

std::vector<RootType> irreducible_types(int max_rank) {
  std::vector<RootType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back('A', r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back('B', r);
  for (int r = 3; r <= max_rank; ++r) out.emplace_back('C', r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back('D', r);
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.emplace_back('E', r);
  if (max_rank >= 4) out.emplace_back('F', 4);
  if (max_rank >= 2) out.emplace_back('G', 2);
  return out;
}

RootType RootType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("cannot parse root type: " + std::string(text));
  int r = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), r);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidArgument("cannot parse root type: " + std::string(text));
  return RootType(text[0], r);
}

std::string RootType::name() const { return std::string(1, series) + std::to_string(rank); }

bool RootType::simply_laced() const { return series == 'A' || series == 'D' || series == 'E'; }

const char* to_string(RootLength l) { return l == RootLength::Long ? "long" : "short"; }

std::size_t RootSystem::expected_size(const RootType& t) {
  std::size_t l = t.rank;
  switch (t.series) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
    case 'F': return 48;
    default: return 12;
  }
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(const RootType& t) {
  std::vector<std::pair<int, int>> edges;
  int l = t.rank;
  switch (t.series) {
    case 'D':
      for (int i = 0; i + 1 <= l - 2; ++i) edges.push_back({i, i + 1});
      edges.push_back({l - 3, l - 1});
      break;
    case 'E':
      for (auto e : {std::pair{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}})
        if (e.second < l) edges.push_back(e);
      break;
    default:
      for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
  }
  return edges;
}

std::vector<int> half_norms(const RootType& t) {
  int l = t.rank;
  std::vector<int> d(l, 1);
  switch (t.series) {
    case 'B':
      std::fill(d.begin(), d.end(), 2);
      d[l - 1] = 1;
      break;
    case 'C': d[l - 1] = 2; break;
    case 'F': d = {2, 2, 1, 1}; break;
    case 'G': d = {1, 3}; break;
    default: break;
  }
  return d;
}

}  // namespace

std::vector<std::vector<int>> RootSystem::gram_of(const RootType& t) {
  int l = t.rank;
  std::vector<int> d = half_norms(t);
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) g[i][i] = 2 * d[i];
  for (auto [i, j] : diagram_edges(t)) g[i][j] = g[j][i] = -std::max(d[i], d[j]);
  return g;
}

RootSystem::RootSystem(RootType type) : type_(type) {
  int l = type_.rank;
  node_len_ = half_norms(type_);
  gram_ = gram_of(type_);
  cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];

  // Reflection closure from the simple roots.
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Coords b = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      int ip = 0;
      for (int j = 0; j < l; ++j) ip += b[j] * gram_[j][i];
      int n = 2 * ip / gram_[i][i];
      if (n == 0) continue;
      Coords r = b;
      r[i] -= n;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }

  std::vector<Coords> pos;
  for (const auto& c : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw InternalError("root with mixed signs");
    if (nonneg) pos.push_back(c);
  }
  auto height_of = [](const Coords& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const Coords& a, const Coords& b) {
    int ha = height_of(a), hb = height_of(b);
    return ha != hb ? ha < hb : a < b;
  });
  roots_ = pos;
  for (const auto& c : pos) {
    Coords n = c;
    for (auto& x : n) x = -x;
    roots_.push_back(n);
  }
  if (roots_.size() != seen.size() || roots_.size() != expected_size(type_))
    throw InternalError("root count mismatch for " + type_.name());

  for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
  for (int i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    simple_index_.push_back(index_.at(c));
  }
  int max_norm = 0;
  for (const auto& c : roots_) {
    height_.push_back(height_of(c));
    norm_.push_back(inner(c, c));
    max_norm = std::max(max_norm, norm_.back());
  }
  for (int n : norm_) length_.push_back(n == max_norm ? RootLength::Long : RootLength::Short);

  std::size_t n = roots_.size();
  sum_table_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Coords s = roots_[i];
      for (int k = 0; k < l; ++k) s[k] += roots_[j][k];
      auto it = index_.find(s);
      if (it != index_.end()) sum_table_[i * n + j] = int(it->second);
    }
}

std::optional<std::size_t> RootSystem::index_of(const Coords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::sum(std::size_t i, std::size_t j) const {
  int s = sum_table_.at(i * roots_.size() + j);
  if (s < 0) return std::nullopt;
  return std::size_t(s);
}

int RootSystem::inner(const Coords& a, const Coords& b) const {
  int s = 0;
  int l = rank();
  for (int i = 0; i < l; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < l; ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

int RootSystem::pairing_with_simple(std::size_t i, int node) const {
  int ip = 0;
  for (int j = 0; j < rank(); ++j) ip += roots_[i][j] * gram_[j][node];
  return 2 * ip / gram_[node][node];
}

int RootSystem::pairing(std::size_t b, std::size_t a) const { return 2 * inner(b, a) / norm(a); }

std::pair<int, int> RootSystem::root_string(std::size_t a, std::size_t b) const {
  if (a == b || a == negate(b)) throw PreconditionError("root string undefined for proportional roots");
  auto scan = [&](int sign) {
    int k = 0;
    while (true) {
      Coords c = roots_[b];
      for (int j = 0; j < rank(); ++j) c[j] += sign * (k + 1) * roots_[a][j];
      if (!index_.count(c)) return k;
      ++k;
    }
  };
  return {scan(-1), scan(+1)};
}

std::string coords_to_string(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace relroot
