#include "hearts/la/kernels.hpp"

namespace hearts::la::kernels::scalar {

void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

}  // namespace hearts::la::kernels::scalar
