#include "hearts/la/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#define HEARTS_HAVE_NEON 1
#endif

namespace hearts::la::kernels::neon {

#ifdef HEARTS_HAVE_NEON

namespace {

inline uint32x4_t reduce(uint32x4_t t, uint32x4_t vp, float32x4_t inv_p) {
  float32x4_t qf = vrndmq_f32(vmulq_f32(vcvtq_f32_u32(t), inv_p));
  int32x4_t r = vsubq_s32(vreinterpretq_s32_u32(t),
                          vreinterpretq_s32_u32(vmulq_u32(vcvtq_u32_f32(qf), vp)));
  int32x4_t sp = vreinterpretq_s32_u32(vp);
  r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltq_s32(r, vdupq_n_s32(0))), sp));
  r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, sp)), sp));
  return vreinterpretq_u32_s32(r);
}

}  // namespace

void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  const float32x4_t inv_p = vdupq_n_f32(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t t = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), c);
    vst1q_u32(dst + i, reduce(t, vp, inv_p));
  }
  scalar::axpy(dst + i, src + i, c, n - i, p);
}

void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  const float32x4_t inv_p = vdupq_n_f32(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_u32(dst + i, reduce(vmulq_n_u32(vld1q_u32(dst + i), c), vp, inv_p));
  scalar::scale(dst + i, c, n - i, p);
}

#else

void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p) { scalar::axpy(dst, src, c, n, p); }
void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p) { scalar::scale(dst, c, n, p); }

#endif

}  // namespace hearts::la::kernels::neon
