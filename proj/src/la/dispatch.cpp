#include <atomic>
#include <cstdlib>
#include <cstring>

#include "hearts/la/kernels.hpp"

namespace hearts::la::kernels {

namespace {

struct Table {
  void (*axpy)(Scalar*, const Scalar*, Scalar, std::size_t, Scalar);
  void (*scale)(Scalar*, Scalar, std::size_t, Scalar);
};

constexpr Table kScalar{scalar::axpy, scalar::scale};
constexpr Table kAvx2{avx2::axpy, avx2::scale};
constexpr Table kNeon{neon::axpy, neon::scale};

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return &kAvx2;
    case Isa::Neon: return &kNeon;
    default: return &kScalar;
  }
}

Isa initial_isa() {
  const char* forced = std::getenv("HEARTS_ISA");
  if (forced && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    default: return "scalar";
  }
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
  if (!isa_available(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p) {
  table_for(active_isa())->axpy(dst, src, c, n, p);
}

void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p) {
  table_for(active_isa())->scale(dst, c, n, p);
}

}  // namespace hearts::la::kernels
