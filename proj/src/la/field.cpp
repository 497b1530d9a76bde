#include "hearts/la/field.hpp"

#include <string>

#include "hearts/error.hpp"

namespace hearts::la {

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Scalar p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw Error(ErrorKind::InvalidPrime, "p = " + std::to_string(p) + " (need a prime below 4096)");
}

Scalar Field::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorKind::Shape, "inverse of zero");
  Scalar result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar Field::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

}  // namespace hearts::la
