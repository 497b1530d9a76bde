#pragma once

#include <array>

#include "hearts/heart/heart.hpp"

namespace hearts::heart {

struct Connecting {
  Morphism h_prime;  // syzygy of C -> A
  Morphism h;        // C -> cosyzygy of A
  Ses left_aux;      // syzygy(C) -> P_C (+) A -> B
  Ses right_aux;     // B -> I^A (+) C -> cosyzygy(A)
};

Connecting connecting(const Ses& ses);

struct LesReport {
  // H of: omega A, omega B, omega C, A, B, C, cosyz A, cosyz B, cosyz C.
  std::array<Representation, 9> terms;
  // Heart morphisms between consecutive terms.
  std::array<Morphism, 8> maps;
  std::array<bool, 7> exact{};
  bool all_exact() const;
};

LesReport les_window(PairEngine& engine, const Ses& ses);

// For A -> B -> U with U in add(u): H(syzygy U) -> H(A) -> H(B) -> 0 is exact.
bool right_exact_shape(PairEngine& engine, const Ses& ses);
// For V -> A -> B with V in add(v): 0 -> H(A) -> H(B) -> H(cosyzygy V) is exact.
bool left_exact_shape(PairEngine& engine, const Ses& ses);

}  // namespace hearts::heart
