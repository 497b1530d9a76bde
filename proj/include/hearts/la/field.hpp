#pragma once

#include <cstdint>

namespace hearts::la {

using Scalar = std::uint32_t;

// Prime field F_p. Primes are limited to p < 4096 so that a + b*c stays below
// 2^24 and the vector kernels can reduce through single precision floats.
class Field {
 public:
  static constexpr Scalar kDefaultPrime = 101;
  static constexpr Scalar kMaxPrime = 4095;

  explicit Field(Scalar p = kDefaultPrime);

  Scalar prime() const { return p_; }
  Scalar add(Scalar a, Scalar b) const { Scalar s = a + b; return s >= p_ ? s - p_ : s; }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar inv(Scalar a) const;
  Scalar reduce(long long v) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  Scalar p_;
};

bool is_prime(Scalar n);

}  // namespace hearts::la
