#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relroot {

using Rational = mpq_class;

/// n / d in canonical form.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Ordered list of indeterminate names. The order fixes the canonical term
/// order of every polynomial built over the registry. A variable named
/// `eps` (configurable) is the one whose quadratic eps^2 - eps may be
/// inverted.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names, std::string localizer = "eps");

  static std::shared_ptr<const VarRegistry> make(std::vector<std::string> names,
                                                 std::string localizer = "eps");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;
  std::optional<std::size_t> localizer() const { return localizer_; }

  bool operator==(const VarRegistry& other) const { return names_ == other.names_ && localizer_ == other.localizer_; }

 private:
  std::vector<std::string> names_;
  std::optional<std::size_t> localizer_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

struct VarPower {
  std::uint16_t var;
  std::uint16_t exp;
  bool operator==(const VarPower&) const = default;
};

/// Sparse exponent vector, sorted by variable index, no zero exponents.
using Monomial = boost::container::small_vector<VarPower, 4>;

/// Lexicographic comparison on dense exponent vectors in registry order.
/// Returns <0, 0, >0.
int compare_monomials(const Monomial& a, const Monomial& b);
Monomial multiply_monomials(const Monomial& a, const Monomial& b);
unsigned exponent_of(const Monomial& m, std::size_t var);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Exact multivariate polynomial with rational coefficients, optionally
/// divided by a power of (eps^2 - eps). Canonical: no zero coefficients,
/// terms sorted by descending monomial, and the numerator is not divisible
/// by eps^2 - eps whenever the denominator power is positive. Structural
/// equality is therefore mathematical equality.
///
/// Constants may be built without a registry; they combine with polynomials
/// over any registry.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(Rational c);  // NOLINT(google-explicit-constructor)

  static Poly constant(RegistryPtr reg, Rational c);
  static Poly var(RegistryPtr reg, std::size_t index, unsigned exp = 1);
  static Poly var(RegistryPtr reg, std::string_view name, unsigned exp = 1);
  /// (eps^2 - eps)^(-1) over `reg`.
  static Poly localizer_inverse(RegistryPtr reg);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws when not constant.
  Rational constant_value() const;

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Term>& terms() const { return terms_; }
  unsigned denom_power() const { return denom_; }

  /// Minimum exponent of `var` over all numerator terms; 0 for the zero polynomial.
  unsigned min_exponent(std::size_t var) const;
  unsigned max_exponent(std::size_t var) const;
  /// Total degree in the given set of variables of every term, when it is
  /// the same for all terms.
  std::optional<unsigned> homogeneous_degree(const std::vector<std::size_t>& vars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
  friend Poly operator*(long c, Poly a) { return a *= Rational(c); }

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  Poly pow(unsigned n) const;

  /// Substitute variables by name. Unbound variables are carried over by
  /// name to the target registry. Throws PreconditionError when the
  /// denominator would vanish.
  Poly substitute(const std::map<std::string, Poly>& bindings) const;

  std::string to_string() const;

 private:
  friend Poly localize_divide(const Poly& p);
  static const RegistryPtr& merge_registry(const Poly& a, const Poly& b);
  void canonicalize_denominator();
  static std::vector<Term> add_terms(const std::vector<Term>& a, const std::vector<Term>& b);
  static std::vector<Term> mul_terms(const std::vector<Term>& a, const std::vector<Term>& b);
  std::vector<Term> raised_numerator(unsigned to_power) const;

  RegistryPtr reg_;
  std::vector<Term> terms_;
  unsigned denom_ = 0;
};

/// Divide by eps^2 - eps. Multiplying the result by eps^2 - eps returns p.
Poly localize_divide(const Poly& p);

/// eps^2 - eps over `reg`.
Poly localizer(RegistryPtr reg);

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace relroot
