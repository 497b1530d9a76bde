#pragma once

#include <string>

#include "hearts/heart/heart.hpp"

namespace hearts::heart {

struct AddStarResult {
  bool via_h = false;
  bool via_oracle = false;
  bool inconclusive = false;  // via_h holds but no witness within the cap
  std::string witness;        // "U' -> b (+) Y -> V'" description
};

// Decides whether b lies in add(u * v) twice: through H, and by searching
// for a conflation U' -> b (+) Y -> V' with U' a sum of at most `cap`
// generators of u and V' a sum of at most `cap` generators of v.
AddStarResult add_star_test(PairEngine& engine, const Representation& b, std::size_t cap = 2,
                            std::uint64_t seed = 1);

// The oracle half alone.
bool add_star_oracle(const cotorsion::CotorsionPair& pair, const Representation& b, std::size_t cap,
                     std::uint64_t seed, std::string* witness = nullptr);

}  // namespace hearts::heart
