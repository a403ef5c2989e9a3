#include "relroot/finitelab.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <iomanip>

#include "relroot/error.hpp"
#include "relroot/prime_field.hpp"

namespace relroot {

FqMatrix::FqMatrix(std::size_t n, std::uint32_t p) : n_(n), p_(p), a_(n * n, '\0') {
  if (p < 2 || p > 255) throw PreconditionError("modulus must lie in [2, 255]");
}

FqMatrix FqMatrix::identity(std::size_t n, std::uint32_t p) {
  FqMatrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

void FqMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::int64_t v = value % std::int64_t(p_);
  if (v < 0) v += p_;
  a_[r * n_ + c] = char(std::uint8_t(v));
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw PreconditionError("matrix shape or modulus mismatch");
  FqMatrix out(n_, p_);
  std::vector<std::uint32_t> row(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t k = 0; k < n_; ++k) {
      std::uint32_t x = std::uint8_t(a_[i * n_ + k]);
      if (!x) continue;
      const char* orow = o.a_.data() + k * n_;
      for (std::size_t j = 0; j < n_; ++j) row[j] += x * std::uint8_t(orow[j]);
    }
    for (std::size_t j = 0; j < n_; ++j) out.a_[i * n_ + j] = char(std::uint8_t(row[j] % p_));
  }
  return out;
}

FqMatrix adjoint_root_element_mod(const ChevalleyBasis& cb, std::size_t root, std::int64_t c, std::uint32_t p) {
  std::size_t n = cb.dim();
  FqMatrix m = FqMatrix::identity(n, p);
  std::vector<std::int64_t> acc(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  std::int64_t ck = 1;
  std::int64_t cm = ((c % std::int64_t(p)) + p) % p;
  for (int k = 1; k <= 3; ++k) {
    ck = ck * cm % p;
    const SparseColumns& pw = cb.divided_power(root, k);
    for (std::size_t j = 0; j < pw.size(); ++j)
      for (const auto& e : pw[j]) acc[e.row * n + j] = (acc[e.row * n + j] + ck * (e.coeff % std::int64_t(p))) % p;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) m.set(r, j, acc[r * n + j]);
  return m;
}

std::size_t default_closure_cap() {
  if (const char* env = std::getenv("RELROOT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::size_t(v);
  }
  return 1000000;
}

GroupClosure close_group(std::vector<FqMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw PreconditionError("closure needs at least one generator");
  GroupClosure g;
  g.generators = std::move(generators);
  FqMatrix id = FqMatrix::identity(g.generators.front().size(), g.generators.front().modulus());
  g.elements.insert(id);
  std::deque<FqMatrix> queue{id};
  while (!queue.empty()) {
    FqMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : g.generators) {
      FqMatrix y = x * s;
      if (g.elements.insert(y).second) {
        if (g.elements.size() > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return g;
}

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = u128(~std::uint64_t(0));

u128 mul_sat(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return std::min(a * b, kSaturated);
}

u128 pow_sat(u128 base, int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) r = mul_sat(r, base);
  return r;
}

std::vector<int> invariant_degrees(const RootType& t) {
  int l = t.rank;
  std::vector<int> d;
  switch (t.series) {
    case 'A':
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i <= l - 1; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
    case 'E':
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      else if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    default: d = {2, 6}; break;
  }
  return d;
}

std::uint64_t center_order(const RootType& t, std::uint32_t q) {
  std::uint64_t qm1 = q - 1;
  switch (t.series) {
    case 'A': return std::gcd<std::uint64_t>(t.rank + 1, qm1);
    case 'B':
    case 'C': return std::gcd<std::uint64_t>(2, qm1);
    case 'D': {
      // q^l - 1 mod 4 decides the gcd.
      std::uint64_t r = 1;
      for (int i = 0; i < t.rank; ++i) r = r * q % 4;
      return std::gcd<std::uint64_t>(4, (r + 3) % 4);
    }
    case 'E':
      if (t.rank == 6) return std::gcd<std::uint64_t>(3, qm1);
      if (t.rank == 7) return std::gcd<std::uint64_t>(2, qm1);
      return 1;
    default: return 1;
  }
}

FqMatrix inverse_by_power(const FqMatrix& x) {
  FqMatrix id = FqMatrix::identity(x.size(), x.modulus());
  FqMatrix prev = id, cur = x;
  while (!(cur == id)) {
    prev = cur;
    cur = cur * x;
  }
  return prev;
}

}  // namespace

std::uint64_t predicted_order(const RootType& t, std::uint32_t p) {
  RootSystem rs(t);
  u128 order = pow_sat(p, int(rs.num_positive()));
  for (int d : invariant_degrees(t)) order = mul_sat(order, pow_sat(p, d) - 1);
  if (order == kSaturated) return std::uint64_t(kSaturated);
  return std::uint64_t(order / center_order(t, p));
}

GroupClosure generate_elementary_group(const RootType& t, std::uint32_t p, std::size_t cap) {
  if (!is_prime(p) || p > 255) throw PreconditionError("p must be a prime below 256");
  std::uint64_t predicted = predicted_order(t, p);
  if (predicted > cap)
    throw CapExceeded("predicted order " + std::to_string(predicted) + " of " + t.name() + " over F_" +
                      std::to_string(p) + " exceeds cap " + std::to_string(cap));
  auto cb = chevalley_basis(t);
  std::vector<FqMatrix> gens;
  for (std::size_t r = 0; r < cb->roots().size(); ++r)
    for (std::uint32_t c = 1; c < p; ++c) gens.push_back(adjoint_root_element_mod(*cb, r, c, p));
  return close_group(std::move(gens), cap);
}

GroupClosure derived_subgroup(const GroupClosure& g, std::size_t cap) {
  std::size_t n = g.generators.front().size();
  std::uint32_t p = g.generators.front().modulus();
  std::vector<FqMatrix> inv;
  for (const auto& x : g.generators) inv.push_back(inverse_by_power(x));

  std::vector<FqMatrix> seeds;
  std::unordered_set<FqMatrix, FqMatrixHash> seen;
  auto add_seed = [&](FqMatrix m) {
    if (seen.insert(m).second) seeds.push_back(std::move(m));
  };
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      add_seed(g.generators[i] * g.generators[j] * inv[i] * inv[j]);
  if (seeds.empty()) add_seed(FqMatrix::identity(n, p));

  // Grow the generating set until it is stable under conjugation by every generator.
  while (true) {
    GroupClosure h = close_group(seeds, cap);
    bool grew = false;
    for (std::size_t s = 0; s < seeds.size() && !grew; ++s)
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        FqMatrix c = g.generators[i] * seeds[s] * inv[i];
        if (!h.elements.count(c)) {
          add_seed(std::move(c));
          grew = true;
          break;
        }
      }
    if (!grew) return h;
  }
}

std::uint64_t derived_subgroup_index(const GroupClosure& g, std::size_t cap) {
  GroupClosure h = derived_subgroup(g, cap);
  if (g.order() % h.order()) throw InternalError("subgroup order does not divide group order");
  return g.order() / h.order();
}

namespace {

std::string predict(const RootType& t, std::uint32_t p) {
  if (t.rank < 2) return "out-of-hypothesis";
  bool rank2_doubly = (t.rank == 2 && (t.series == 'B' || t.series == 'C')) || t.series == 'G';
  return rank2_doubly && p == 2 ? "not perfect" : "perfect";
}

}  // namespace

std::vector<PerfectnessRow> perfectness_report(const std::vector<std::pair<RootType, std::uint32_t>>& cases,
                                               std::size_t cap) {
  std::vector<PerfectnessRow> rows;
  for (const auto& [t, p] : cases) {
    PerfectnessRow row{t, p, std::nullopt, std::nullopt, "", predict(t, p), ""};
    try {
      GroupClosure g = generate_elementary_group(t, p, cap);
      row.order = g.order();
      row.index = derived_subgroup_index(g, cap);
      row.result = *row.index == 1 ? "perfect" : "not perfect";
      if (row.prediction == "out-of-hypothesis") row.verdict = "out-of-hypothesis";
      else row.verdict = row.prediction == row.result ? "agrees" : "disagrees";
    } catch (const CapExceeded&) {
      row.result = "skipped: cap";
      row.verdict = "skipped";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<RootType, std::uint32_t>> default_perfectness_catalog() {
  std::vector<std::pair<RootType, std::uint32_t>> out;
  for (const char* name : {"A2", "C2", "G2", "A3", "B3"})
    for (std::uint32_t p : {2u, 3u}) out.emplace_back(RootType::parse(name), p);
  return out;
}

nlohmann::json to_json(const PerfectnessRow& row) {
  nlohmann::json j;
  j["type"] = row.type.name();
  j["p"] = row.p;
  j["order"] = row.order ? nlohmann::json(*row.order) : nlohmann::json(nullptr);
  j["index"] = row.index ? nlohmann::json(*row.index) : nlohmann::json(nullptr);
  j["result"] = row.result;
  j["prediction"] = row.prediction;
  j["verdict"] = row.verdict;
  return j;
}

std::string format_table(const std::vector<PerfectnessRow>& rows) {
  std::ostringstream os;
  os << "perfectness of adjoint image\n";
  os << std::left << std::setw(6) << "type" << std::setw(4) << "p" << std::setw(12) << "order" << std::setw(7)
     << "index" << std::setw(15) << "result" << std::setw(19) << "prediction"
     << "verdict\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(6) << r.type.name() << std::setw(4) << r.p << std::setw(12)
       << (r.order ? std::to_string(*r.order) : "-") << std::setw(7) << (r.index ? std::to_string(*r.index) : "-")
       << std::setw(15) << r.result << std::setw(19) << r.prediction << r.verdict << "\n";
  }
  return os.str();
}

}  // namespace relroot
