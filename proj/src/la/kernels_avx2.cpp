#include "hearts/la/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define HEARTS_HAVE_X86 1
#endif

namespace hearts::la::kernels::avx2 {

#ifdef HEARTS_HAVE_X86

namespace {

// t < 2^24, so float(t) is exact and the quotient estimate is off by at most one.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i t, __m256i vp, __m256 inv_p) {
  __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(t), inv_p));
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(_mm256_cvttps_epi32(q), vp));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), vp));
  __m256i pm1 = _mm256_sub_epi32(vp, _mm256_set1_epi32(1));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), vp));
  return r;
}

}  // namespace

__attribute__((target("avx2"))) void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(t, vp, inv_p));
  }
  scalar::axpy(dst + i, src + i, c, n - i, p);
}

__attribute__((target("avx2"))) void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(_mm256_mullo_epi32(d, vc), vp, inv_p));
  }
  scalar::scale(dst + i, c, n - i, p);
}

#else

void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p) { scalar::axpy(dst, src, c, n, p); }
void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p) { scalar::scale(dst, c, n, p); }

#endif

}  // namespace hearts::la::kernels::avx2
