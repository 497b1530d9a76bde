#pragma once

#include <cstddef>
#include <string_view>

#include "hearts/la/field.hpp"

namespace hearts::la::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

// Best variant supported by the running CPU.
Isa detected_isa();
Isa active_isa();
// Returns false when the requested variant is unavailable on this CPU.
bool set_isa(Isa isa);
bool isa_available(Isa isa);

// dst[i] = (dst[i] + c * src[i]) mod p, all operands already reduced.
void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p);
// dst[i] = (c * dst[i]) mod p
void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p);

namespace scalar {
void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p);
void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p);
}  // namespace scalar

namespace avx2 {
void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p);
void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p);
}  // namespace avx2

namespace neon {
void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t n, Scalar p);
void scale(Scalar* dst, Scalar c, std::size_t n, Scalar p);
}  // namespace neon

}  // namespace hearts::la::kernels
