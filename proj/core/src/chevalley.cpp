#include "relroot/chevalley.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace relroot {

namespace {

enum : char { kUnknown = 0, kBusy = 1, kDone = 2 };

}  // namespace

ChevalleyBasis::ChevalleyBasis(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  const RootSystem& R = *rs_;
  std::size_t n = R.size();
  extraspecial_.assign(R.num_positive(), n);
  for (std::size_t xi = 0; xi < R.num_positive(); ++xi) {
    if (R.height(xi) == 1) continue;
    for (int i = 0; i < R.rank(); ++i) {
      Coords c = R.root(xi);
      c[i] -= 1;
      auto rest = R.index_of(c);
      if (rest && R.is_positive(*rest)) {
        extraspecial_[xi] = R.simple(i);
        break;
      }
    }
  }
  n_.assign(n * n, 0);
  std::vector<char> state(n * n, kUnknown);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) compute_n(a, b, state);
  build_brackets();
  build_powers();
  verify();
}

std::pair<std::size_t, std::size_t> ChevalleyBasis::extraspecial_pair(std::size_t xi) const {
  if (!rs_->is_positive(xi) || rs_->height(xi) == 1) throw PreconditionError("extraspecial pair needs a positive non-simple root");
  std::size_t a = extraspecial_[xi];
  Coords c = rs_->root(xi);
  for (int k = 0; k < rs_->rank(); ++k) c[k] -= rs_->root(a)[k];
  return {a, *rs_->index_of(c)};
}

int ChevalleyBasis::compute_n(std::size_t a, std::size_t b, std::vector<char>& state) {
  const RootSystem& R = *rs_;
  std::size_t n = R.size();
  std::size_t key = a * n + b;
  if (state[key] == kDone) return n_[key];
  if (state[key] == kBusy) throw InternalError("cyclic structure constant recursion");
  auto s = R.sum(a, b);
  if (!s) {
    state[key] = kDone;
    return 0;
  }
  state[key] = kBusy;
  int p = R.root_string(a, b).first;
  int value = 0;
  bool pa = R.is_positive(a), pb = R.is_positive(b);
  if (pa && pb) {
    auto [g, d] = extraspecial_pair(*s);
    if (a == g && b == d) {
      value = p + 1;
    } else if (a == d && b == g) {
      value = -(p + 1);
    } else {
      // Four-term relation applied to a, b, -g, -d, with N_{-g,-d} = -(p_gd + 1).
      int pgd = R.root_string(g, d).first;
      Rational n_neg = -(pgd + 1);
      std::size_t mg = R.negate(g), md = R.negate(d);
      Rational bracket = 0;
      if (auto bg = R.sum(b, mg))
        bracket += ratio(compute_n(b, mg, state) * compute_n(a, md, state), R.norm(*bg));
      if (auto ag = R.sum(a, mg))
        bracket += ratio(compute_n(mg, a, state) * compute_n(b, md, state), R.norm(*ag));
      Rational v = -Rational(R.norm(*s)) / n_neg * bracket;
      if (v.get_den() != 1) throw InternalError("non-integral structure constant ");
      value = int(v.get_num().get_si());
    }
  } else if (!pa && !pb) {
    int m = compute_n(R.negate(a), R.negate(b), state);
    value = -(p + 1) * (p + 1) / m;
  } else if (pa && !pb) {
    std::size_t c = R.negate(*s);
    if (R.is_positive(*s)) value = R.norm(c) * compute_n(b, c, state) / R.norm(a);
    else value = R.norm(c) * compute_n(c, a, state) / R.norm(b);
  } else {
    value = -compute_n(b, a, state);
  }
  n_[key] = value;
  state[key] = kDone;
  return value;
}

void ChevalleyBasis::build_brackets() {
  const RootSystem& R = *rs_;
  std::size_t d = dim();
  std::size_t np = R.num_positive();
  int l = R.rank();
  table_.assign(d * d, {});
  // Inverse of basis_of_root / basis_of_h.
  auto root_of = [&](std::size_t x) -> std::optional<std::size_t> {
    if (x < np) return x;
    if (x < np + l) return std::nullopt;
    return x - l;
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      auto rx = root_of(x), ry = root_of(y);
      auto& out = table_[x * d + y];
      if (rx && ry) {
        if (*ry == R.negate(*rx)) {
          // h_a = sum_i m_i(a) (alpha_i, alpha_i) / (a, a) h_i
          for (int i = 0; i < l; ++i) {
            int num = R.root(*rx)[i] * R.gram()[i][i];
            if (num % R.norm(*rx)) throw InternalError("non-integral coroot");
            if (num) out.push_back({std::uint32_t(basis_of_h(i)), num / R.norm(*rx)});
          }
        } else if (auto s = R.sum(*rx, *ry)) {
          out.push_back({std::uint32_t(basis_of_root(*s)), structure_constant(*rx, *ry)});
        }
      } else if (rx) {
        int i = int(y - np);
        int c = -R.pairing_with_simple(*rx, i);
        if (c) out.push_back({std::uint32_t(x), c});
      } else if (ry) {
        int i = int(x - np);
        int c = R.pairing_with_simple(*ry, i);
        if (c) out.push_back({std::uint32_t(y), c});
      }
    }
}

void ChevalleyBasis::build_powers() {
  const RootSystem& R = *rs_;
  std::size_t d = dim();
  powers_.resize(R.size());
  for (std::size_t r = 0; r < R.size(); ++r) {
    std::size_t x = basis_of_root(r);
    SparseColumns e1(d);
    for (std::size_t j = 0; j < d; ++j) e1[j] = bracket(x, j);
    powers_[r].push_back(e1);
    for (int k = 2; k <= 4; ++k) {
      const SparseColumns& prev = powers_[r].back();
      SparseColumns next(d);
      bool any = false;
      for (std::size_t j = 0; j < d; ++j) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (const auto& e : prev[j])
          for (const auto& f : e1[e.row]) acc[f.row] += e.coeff * f.coeff;
        for (auto [row, c] : acc) {
          if (c == 0) continue;
          if (c % k) throw InternalError("non-integral divided power");
          next[j].push_back({row, c / k});
          any = true;
        }
      }
      if (k == 4) {
        if (any) throw InternalError("ad e is not nilpotent of order 4");
        break;
      }
      powers_[r].push_back(std::move(next));
    }
  }
}

void ChevalleyBasis::verify() const {
  const RootSystem& R = *rs_;
  std::size_t n = R.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int v = structure_constant(a, b);
      if (v != -structure_constant(b, a)) throw InternalError("structure constants not antisymmetric");
      if (!R.sum(a, b)) continue;
      if (std::abs(v) != R.root_string(a, b).first + 1) throw InternalError("|N| differs from p+1");
    }
  std::size_t d = dim();
  std::vector<std::int64_t> acc(d, 0);
  std::vector<std::uint32_t> touched;
  auto add_bracket = [&](std::size_t x, std::size_t y, std::size_t z) {
    // acc += [x, [y, z]]
    for (const auto& e : bracket(y, z))
      for (const auto& f : bracket(x, e.row)) {
        if (acc[f.row] == 0) touched.push_back(f.row);
        acc[f.row] += e.coeff * f.coeff;
      }
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = y + 1; z < d; ++z) {
        add_bracket(x, y, z);
        add_bracket(y, z, x);
        add_bracket(z, x, y);
        for (auto r : touched) {
          if (acc[r] != 0) throw InternalError("Jacobi identity fails in " + R.type().name());
        }
        touched.clear();
      }
}

std::shared_ptr<const RootSystem> root_system(const RootType& t) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[t.name()];
  if (!slot) slot = std::make_shared<const RootSystem>(t);
  return slot;
}

std::shared_ptr<const ChevalleyBasis> chevalley_basis(const RootType& t) {
  auto rs = root_system(t);
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ChevalleyBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[t.name()];
  if (!slot) slot = std::make_shared<const ChevalleyBasis>(rs);
  return slot;
}

UnipotentMatrix adjoint_root_element(const ChevalleyBasis& cb, std::size_t root, const Poly& t) {
  Poly zero = Poly::constant(t.registry(), 0);
  Poly one = Poly::constant(t.registry(), 1);
  return word_matrix(cb, Word<Poly>{{root, t}}, zero, one);
}

std::vector<std::size_t> default_order(const RootSystem& rs, bool positive) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.num_positive(); ++i) out.push_back(positive ? i : rs.negate(i));
  return out;
}

Word<Poly> collect_to_normal_form(const ChevalleyBasis& cb, const Word<Poly>& word, std::vector<std::size_t> order) {
  const RootSystem& rs = cb.roots();
  if (word.empty()) return {};
  bool positive = rs.is_positive(word.front().root);
  RegistryPtr reg;
  for (const auto& l : word) {
    if (rs.is_positive(l.root) != positive) throw PreconditionError("word mixes positive and negative roots");
    if (!reg) reg = l.t.registry();
  }
  if (order.empty()) order = default_order(rs, positive);
  Poly zero = Poly::constant(reg, 0), one = Poly::constant(reg, 1);
  auto coeffs = collect_h_columns(cb, h_columns(cb, word, zero, one), order, zero, one);
  Word<Poly> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!coeffs[i].is_zero()) out.push_back({order[i], coeffs[i]});
  return out;
}

std::vector<CommutatorTerm> commutator_constants(const ChevalleyBasis& cb, std::size_t a, std::size_t b) {
  const RootSystem& rs = cb.roots();
  if (a == b || a == rs.negate(b)) throw PreconditionError("commutator constants need non-collinear roots");
  std::vector<CommutatorTerm> terms;
  for (int s = 2; s <= 6; ++s)
    for (int i = 1; i < s; ++i) {
      int j = s - i;
      Coords c(rs.rank());
      for (int k = 0; k < rs.rank(); ++k) c[k] = i * rs.root(a)[k] + j * rs.root(b)[k];
      if (auto r = rs.index_of(c)) terms.push_back({i, j, *r, 0});
    }
  if (terms.empty()) return terms;
  Word<std::int64_t> w = commutator_word<std::int64_t>({{a, 1}}, {{b, 1}});
  std::vector<std::size_t> order;
  for (const auto& t : terms) order.push_back(t.root);
  auto coeffs = collect_h_columns<std::int64_t>(cb, h_columns<std::int64_t>(cb, w, 0, 1), order, 0, 1);
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k].c = coeffs[k];
  return terms;
}

}  // namespace relroot
