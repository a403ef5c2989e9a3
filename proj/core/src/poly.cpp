#include "relroot/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "relroot/error.hpp"

namespace relroot {

VarRegistry::VarRegistry(std::vector<std::string> names, std::string localizer) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name: " + n);
  }
  if (names_.size() > 0xffff) throw InvalidArgument("too many variables");
  localizer_ = index_of(localizer);
}

std::shared_ptr<const VarRegistry> VarRegistry::make(std::vector<std::string> names, std::string localizer) {
  return std::make_shared<const VarRegistry>(std::move(names), std::move(localizer));
}

std::optional<std::size_t> VarRegistry::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarRegistry::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw InvalidArgument("unknown variable: " + std::string(name));
  return *i;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var == b[j].var) {
      if (a[i].exp != b[j].exp) return a[i].exp < b[j].exp ? -1 : 1;
      ++i;
      ++j;
    } else {
      return a[i].var < b[j].var ? 1 : -1;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].var < b[j].var)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].var < a[i].var) {
      out.push_back(b[j++]);
    } else {
      unsigned e = unsigned(a[i].exp) + b[j].exp;
      if (e > 0xffff) throw InvalidArgument("exponent overflow");
      out.push_back({a[i].var, std::uint16_t(e)});
      ++i;
      ++j;
    }
  }
  return out;
}

unsigned exponent_of(const Monomial& m, std::size_t var) {
  for (const auto& vp : m)
    if (vp.var == var) return vp.exp;
  return 0;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return compare_monomials(a.mono, b.mono) > 0; }

// Sort by descending monomial and merge equal monomials, dropping zeros.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && compare_monomials(out.back().mono, t.mono) == 0) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms = std::move(out);
}

Monomial set_exponent(const Monomial& m, std::size_t var, unsigned exp) {
  Monomial out;
  bool placed = false;
  for (const auto& vp : m) {
    if (vp.var == var) continue;
    if (!placed && vp.var > var) {
      if (exp) out.push_back({std::uint16_t(var), std::uint16_t(exp)});
      placed = true;
    }
    out.push_back(vp);
  }
  if (!placed && exp) out.push_back({std::uint16_t(var), std::uint16_t(exp)});
  return out;
}

}  // namespace

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(Rational c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Poly Poly::constant(RegistryPtr reg, Rational c) {
  Poly p(std::move(c));
  p.reg_ = std::move(reg);
  return p;
}

Poly Poly::var(RegistryPtr reg, std::size_t index, unsigned exp) {
  if (!reg || index >= reg->size()) throw InvalidArgument("variable index out of range");
  Poly p;
  p.reg_ = std::move(reg);
  Monomial m;
  if (exp) m.push_back({std::uint16_t(index), std::uint16_t(exp)});
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Poly Poly::var(RegistryPtr reg, std::string_view name, unsigned exp) {
  if (!reg) throw InvalidArgument("no registry");
  std::size_t i = reg->require(name);
  return var(std::move(reg), i, exp);
}

Poly localizer(RegistryPtr reg) {
  if (!reg || !reg->localizer()) throw PreconditionError("registry has no localization variable");
  std::size_t e = *reg->localizer();
  return Poly::var(reg, e, 2) - Poly::var(reg, e, 1);
}

Poly Poly::localizer_inverse(RegistryPtr reg) { return localize_divide(Poly::constant(std::move(reg), 1)); }

bool Poly::is_constant() const {
  return denom_ == 0 && (terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()));
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw PreconditionError("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

unsigned Poly::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned m = ~0u;
  for (const auto& t : terms_) m = std::min(m, exponent_of(t.mono, var));
  return m;
}

unsigned Poly::max_exponent(std::size_t var) const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, exponent_of(t.mono, var));
  return m;
}

std::optional<unsigned> Poly::homogeneous_degree(const std::vector<std::size_t>& vars) const {
  std::optional<unsigned> deg;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (auto v : vars) d += exponent_of(t.mono, v);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<unsigned>(0);
}

const RegistryPtr& Poly::merge_registry(const Poly& a, const Poly& b) {
  if (!a.reg_) return b.reg_;
  if (!b.reg_ || a.reg_ == b.reg_ || *a.reg_ == *b.reg_) return a.reg_;
  throw RegistryMismatch("polynomials over different registries");
}

std::vector<Term> Poly::add_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : compare_monomials(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].coeff + b[j].coeff;
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> Poly::mul_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && a[0].mono.empty()) {
    std::vector<Term> out = b;
    for (auto& t : out) t.coeff *= a[0].coeff;
    return out;
  }
  if (b.size() == 1 && b[0].mono.empty()) return mul_terms(b, a);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({multiply_monomials(x.mono, y.mono), x.coeff * y.coeff});
  normalize_terms(out);
  return out;
}

std::vector<Term> Poly::raised_numerator(unsigned to_power) const {
  if (to_power == denom_) return terms_;
  Poly d = localizer(reg_);
  std::vector<Term> num = terms_;
  for (unsigned i = denom_; i < to_power; ++i) num = mul_terms(num, d.terms_);
  return num;
}

void Poly::canonicalize_denominator() {
  if (terms_.empty()) {
    denom_ = 0;
    return;
  }
  while (denom_ > 0) {
    std::size_t e = *reg_->localizer();
    if (min_exponent(e) == 0) return;
    // Divisibility by (eps - 1): every coefficient polynomial in eps must vanish at eps = 1.
    // Group terms by their eps-free part and divide each group synthetically.
    auto less = [](const Monomial& a, const Monomial& b) { return compare_monomials(a, b) < 0; };
    std::map<Monomial, std::vector<std::pair<unsigned, Rational>>, decltype(less)> groups(less);
    for (const auto& t : terms_) groups[set_exponent(t.mono, e, 0)].push_back({exponent_of(t.mono, e), t.coeff});
    std::vector<Term> quotient;
    for (auto& [rest, coeffs] : groups) {
      Rational sum = 0;
      for (const auto& c : coeffs) sum += c.second;
      if (sgn(sum) != 0) return;
      unsigned top = 0;
      for (const auto& c : coeffs) top = std::max(top, c.first);
      std::vector<Rational> dense(top + 1);
      for (const auto& c : coeffs) dense[c.first] += c.second;
      // p(x) = (x - 1) q(x); q has degree top-1, divided once more by x below.
      Rational carry = 0;
      for (unsigned d = top; d >= 1; --d) {
        carry += dense[d];
        // carry is the coefficient of x^(d-1) in q; q(0) = -p(0) = 0, so q/x is exact.
        if (sgn(carry) != 0) quotient.push_back({set_exponent(rest, e, d - 2), carry});
      }
    }
    normalize_terms(quotient);
    terms_ = std::move(quotient);
    --denom_;
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  const RegistryPtr& reg = merge_registry(*this, other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    *this = other;
    reg_ = reg;
    return *this;
  }
  reg_ = reg;
  if (denom_ == 0 && other.denom_ == 0) {
    terms_ = add_terms(terms_, other.terms_);
    return *this;
  }
  unsigned k = std::max(denom_, other.denom_);
  Poly o = other;
  o.reg_ = reg;
  terms_ = add_terms(raised_numerator(k), o.raised_numerator(k));
  denom_ = k;
  canonicalize_denominator();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.reg_ = Poly::merge_registry(a, b);
  r.terms_ = Poly::mul_terms(a.terms_, b.terms_);
  if (r.terms_.empty()) return r;
  r.denom_ = a.denom_ + b.denom_;
  if (r.denom_) r.canonicalize_denominator();
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    denom_ = 0;
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool Poly::operator==(const Poly& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  merge_registry(*this, other);
  if (denom_ != other.denom_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono)) return false;
  return true;
}

Poly Poly::pow(unsigned n) const {
  Poly r = Poly::constant(reg_, 1);
  Poly b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

Poly localize_divide(const Poly& p) {
  if (p.terms_.empty()) return p;
  if (!p.reg_ || !p.reg_->localizer()) throw PreconditionError("registry has no localization variable");
  Poly r = p;
  ++r.denom_;
  r.canonicalize_denominator();
  return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  if (terms_.empty()) return *this;
  // Target registry: the common registry of all bound values, else the source registry.
  RegistryPtr target;
  for (const auto& [name, value] : bindings) {
    if (!value.reg_) continue;
    if (!target) target = value.reg_;
    else if (!(target == value.reg_ || *target == *value.reg_)) throw RegistryMismatch("bindings over different registries");
  }
  if (!target) target = reg_;

  std::vector<Poly> images(reg_ ? reg_->size() : 0);
  for (std::size_t v = 0; v < images.size(); ++v) {
    const std::string& name = reg_->name(v);
    auto it = bindings.find(name);
    if (it != bindings.end()) {
      images[v] = it->second;
    } else {
      if (!target) throw InvalidArgument("unbound variable without target registry: " + name);
      images[v] = Poly::var(target, name);
    }
  }

  Poly num = Poly::constant(target, 0);
  for (const auto& t : terms_) {
    Poly term = Poly::constant(target, t.coeff);
    for (const auto& vp : t.mono) term *= images[vp.var].pow(vp.exp);
    num += term;
  }
  if (denom_ == 0) return num;

  std::size_t e = *reg_->localizer();
  Poly d = images[e] * images[e] - images[e];
  if (d.is_constant()) {
    Rational c = d.constant_value();
    if (sgn(c) == 0) throw PreconditionError("substitution makes eps^2 - eps vanish");
    Rational scale = 1;
    for (unsigned i = 0; i < denom_; ++i) scale /= c;
    return num * scale;
  }
  if (target && target->localizer() && d == localizer(target)) {
    for (unsigned i = 0; i < denom_; ++i) num = localize_divide(num);
    return num;
  }
  throw PreconditionError("unsupported substitution for the localization variable");
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.empty()) os << c.get_str();
    bool star = !unit;
    for (const auto& vp : t.mono) {
      if (star) os << '*';
      star = true;
      os << (reg_ ? reg_->name(vp.var) : "x" + std::to_string(vp.var));
      if (vp.exp > 1) os << '^' << vp.exp;
    }
  }
  if (denom_ == 0) return os.str();
  std::string out = "(" + os.str() + ")/(eps^2-eps)";
  if (denom_ > 1) out += "^" + std::to_string(denom_);
  return out;
}

}  // namespace relroot
