#include "doctest.h"

#include <random>

#include "hearts/la/kernels.hpp"
#include "hearts/la/mat.hpp"

using namespace hearts::la;

namespace {

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_isa(saved); }
};

}  // namespace

TEST_CASE("vector kernels match the scalar reference") {
  std::mt19937 rng(3);
  for (Scalar p : {2u, 3u, 101u, 257u, 4093u}) {
    std::uniform_int_distribution<Scalar> d(0, p - 1);
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
      std::vector<Scalar> src(n), a(n);
      for (auto& x : src) x = d(rng);
      for (auto& x : a) x = d(rng);
      Scalar c = d(rng);
      auto ref = a, simd = a, neon = a;
      kernels::scalar::axpy(ref.data(), src.data(), c, n, p);
      kernels::avx2::axpy(simd.data(), src.data(), c, n, p);
      kernels::neon::axpy(neon.data(), src.data(), c, n, p);
      if (kernels::isa_available(kernels::Isa::Avx2)) CHECK(simd == ref);
      CHECK(neon == ref);
      auto sref = a, ssimd = a;
      kernels::scalar::scale(sref.data(), c, n, p);
      kernels::avx2::scale(ssimd.data(), c, n, p);
      if (kernels::isa_available(kernels::Isa::Avx2)) CHECK(ssimd == sref);
    }
  }
}

TEST_CASE("extreme operands reduce exactly") {
  const Scalar p = 4093;
  std::vector<Scalar> src(16, p - 1), dst(16, p - 1), ref = dst;
  kernels::scalar::axpy(ref.data(), src.data(), p - 1, 16, p);
  if (kernels::isa_available(kernels::Isa::Avx2)) {
    kernels::avx2::axpy(dst.data(), src.data(), p - 1, 16, p);
    CHECK(dst == ref);
  }
  CHECK(ref[0] == ((p - 1) + (p - 1) * (p - 1)) % p);
}

TEST_CASE("row reduction is identical under every available variant") {
  IsaGuard guard;
  std::mt19937 rng(5);
  Field f(101);
  for (int t = 0; t < 20; ++t) {
    Mat m(f, 13, 29);
    std::uniform_int_distribution<Scalar> d(0, 100);
    for (auto& x : m.data()) x = d(rng) % 3 == 0 ? 0 : d(rng);
    REQUIRE(kernels::set_isa(kernels::Isa::Scalar));
    Echelon a = row_reduce(m);
    Mat pa = m * m.transposed();
    if (kernels::set_isa(kernels::detected_isa())) {
      Echelon b = row_reduce(m);
      CHECK(a.rref == b.rref);
      CHECK(a.pivots == b.pivots);
      CHECK(pa == m * m.transposed());
    }
  }
}

TEST_CASE("dispatch reports the chosen variant") {
  IsaGuard guard;
  CHECK(kernels::isa_available(kernels::Isa::Scalar));
  CHECK(kernels::set_isa(kernels::Isa::Scalar));
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  CHECK(kernels::isa_name(kernels::Isa::Avx2) == "avx2");
}
