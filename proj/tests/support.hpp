#pragma once

// Oracles shared by the test binaries. Nothing here calls the library's
// collection or apply code: root elements act through the bracket table
// and a truncated exponential series.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "relroot/chevalley.hpp"
#include "relroot/folding.hpp"
#include "relroot/poly.hpp"

namespace support {

using relroot::ChevalleyBasis;
using relroot::Poly;
using relroot::Rational;
using relroot::RegistryPtr;

/// Variable names occurring in Poly::to_string output.
inline void collect_names(const std::string& text, std::set<std::string>& names) {
  std::string cur;
  auto flush = [&] {
    if (!cur.empty() && std::isalpha(static_cast<unsigned char>(cur[0]))) names.insert(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') cur += ch;
    else flush();
  }
  flush();
}

/// Inverse of Poly::to_string over `reg`.
inline Poly parse_poly(const RegistryPtr& reg, std::string text) {
  unsigned denom = 0;
  const std::string tail = ")/(eps^2-eps)";
  if (!text.empty() && text.front() == '(') {
    auto pos = text.rfind(tail);
    std::string rest = text.substr(pos + tail.size());
    denom = rest.empty() ? 1 : unsigned(std::stoi(rest.substr(1)));
    text = text.substr(1, pos - 1);
  }
  Poly out = Poly::constant(reg, 0);
  std::size_t i = 0;
  int sign = 1;
  if (!text.empty() && text[0] == '-') {
    sign = -1;
    i = 1;
  }
  while (i <= text.size()) {
    std::size_t next = text.size();
    int next_sign = 1;
    for (std::size_t j = i; j + 2 < text.size(); ++j)
      if (text[j] == ' ' && (text[j + 1] == '+' || text[j + 1] == '-') && text[j + 2] == ' ') {
        next = j;
        next_sign = text[j + 1] == '-' ? -1 : 1;
        break;
      }
    std::string term = text.substr(i, next - i);
    Poly t = Poly::constant(reg, sign);
    std::size_t k = 0;
    while (k <= term.size()) {
      std::size_t star = term.find('*', k);
      if (star == std::string::npos) star = term.size();
      std::string f = term.substr(k, star - k);
      if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        Rational q(f);
        q.canonicalize();
        t *= q;
      } else {
        auto caret = f.find('^');
        unsigned e = caret == std::string::npos ? 1 : unsigned(std::stoi(f.substr(caret + 1)));
        t *= Poly::var(reg, f.substr(0, caret), e);
      }
      k = star + 1;
    }
    out += t;
    if (next == text.size()) break;
    i = next + 3;
    sign = next_sign;
  }
  for (unsigned d = 0; d < denom; ++d) out *= Poly::localizer_inverse(reg);
  return out;
}

/// Registry holding every name used by the given witness strings, with eps as localizer.
inline RegistryPtr registry_for(const std::vector<std::string>& texts) {
  std::set<std::string> names{"eps"};
  for (const auto& t : texts) collect_names(t, names);
  return relroot::VarRegistry::make(std::vector<std::string>(names.begin(), names.end()), "eps");
}

/// ad(e_root) applied to a coefficient vector, read from the bracket table.
inline std::vector<Poly> ad_apply(const ChevalleyBasis& cb, std::size_t root, const std::vector<Poly>& v) {
  std::vector<Poly> out(v.size(), Poly(0));
  std::size_t x = cb.basis_of_root(root);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& e : cb.bracket(x, j)) out[e.row] += v[j] * Rational(long(e.coeff));
  }
  return out;
}

/// exp(t ad e_root) v by the series, checking that the fourth power vanishes.
inline std::vector<Poly> exp_apply(const ChevalleyBasis& cb, std::size_t root, const Poly& t, std::vector<Poly> v) {
  std::vector<Poly> term = v;
  for (int k = 1; k <= 4; ++k) {
    term = ad_apply(cb, root, term);
    bool zero = std::all_of(term.begin(), term.end(), [](const Poly& p) { return p.is_zero(); });
    if (zero) return v;
    if (k == 4) throw std::runtime_error("ad e is not nilpotent of order 4");
    for (auto& p : term) p = p * t * relroot::ratio(1, k);
    for (std::size_t r = 0; r < v.size(); ++r) v[r] += term[r];
  }
  return v;
}

using Factors = std::vector<std::pair<std::size_t, Poly>>;

inline std::vector<std::vector<Poly>> product_columns(const ChevalleyBasis& cb, const Factors& w) {
  std::vector<std::vector<Poly>> cols;
  for (std::size_t j = 0; j < cb.dim(); ++j) {
    std::vector<Poly> v(cb.dim(), Poly(0));
    v[j] = Poly(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = exp_apply(cb, it->first, it->second, std::move(v));
    cols.push_back(std::move(v));
  }
  return cols;
}

inline bool same_product(const ChevalleyBasis& cb, const Factors& a, const Factors& b) {
  return product_columns(cb, a) == product_columns(cb, b);
}

/// Word from a witness list [{root: coords, t: text}, ...].
inline Factors factors_from_json(const ChevalleyBasis& cb, const RegistryPtr& reg, const nlohmann::json& word) {
  Factors out;
  for (const auto& l : word) {
    auto idx = cb.roots().index_of(l.at("root").get<relroot::Coords>());
    if (!idx) throw std::runtime_error("witness root is not a root");
    out.push_back({*idx, parse_poly(reg, l.at("t").get<std::string>())});
  }
  return out;
}

inline void strings_in(const nlohmann::json& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  else if (j.is_structured())
    for (const auto& x : j) strings_in(x, out);
}

/// X_A(coords) realized over the fiber of a relative root, fiber order.
inline Factors relative_factors(const relroot::RelativeRootSystem& rrs, std::size_t a, const std::vector<Poly>& coords) {
  Factors out;
  const auto& fib = rrs.fiber(a);
  for (std::size_t i = 0; i < fib.size(); ++i)
    if (!coords.at(i).is_zero()) out.push_back({fib[i], coords[i]});
  return out;
}

inline Factors inverse(const Factors& w) {
  Factors out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, -it->second});
  return out;
}

inline Factors concat(Factors a, const Factors& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Factors commutator(const Factors& x, const Factors& y) {
  return concat(concat(concat(x, y), inverse(x)), inverse(y));
}

}  // namespace support
