#include "relroot/prime_field.hpp"

#include "relroot/error.hpp"

namespace relroot {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % std::int64_t(p);
  return std::uint32_t(r < 0 ? r + p : r);
}

PrimeFieldElem::PrimeFieldElem(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus >= (1u << 16) || !is_prime(modulus)) throw InvalidArgument("modulus must be a prime below 65536");
  value_ = reduce_mod(value, modulus);
}

void PrimeFieldElem::check_same(const PrimeFieldElem& o) const {
  if (modulus_ != o.modulus_) throw InvalidArgument("prime field moduli differ");
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& o) const {
  check_same(o);
  return {std::int64_t(value_) + o.value_, modulus_};
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& o) const {
  check_same(o);
  return {std::int64_t(value_) - o.value_, modulus_};
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& o) const {
  check_same(o);
  return {std::int64_t(value_) * o.value_, modulus_};
}

PrimeFieldElem PrimeFieldElem::operator-() const { return {-std::int64_t(value_), modulus_}; }

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (value_ == 0) throw PreconditionError("zero has no inverse");
  // Fermat: a^(p-2).
  std::int64_t result = 1, base = value_;
  std::uint32_t e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return {result, modulus_};
}

}  // namespace relroot
