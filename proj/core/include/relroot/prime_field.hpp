#pragma once

#include <cstdint>
#include <string>

namespace relroot {

bool is_prime(std::uint32_t n);

/// Element of the prime field F_p. Small primes only (p < 2^16).
class PrimeFieldElem {
 public:
  PrimeFieldElem(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  PrimeFieldElem operator+(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-(const PrimeFieldElem& o) const;
  PrimeFieldElem operator*(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-() const;
  PrimeFieldElem inverse() const;
  bool is_zero() const { return value_ == 0; }

  bool operator==(const PrimeFieldElem&) const = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  void check_same(const PrimeFieldElem& o) const;
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Reduce an integer into [0, p).
std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p);

}  // namespace relroot
