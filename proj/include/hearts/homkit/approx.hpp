#pragma once

#include <vector>

#include "hearts/homkit/subcategory.hpp"
#include "hearts/quiver/constructions.hpp"

namespace hearts::homkit {

enum class ApproxSide { Right, Left };

struct Approximation {
  quiver::DirectSum object;
  // Right: object -> b. Left: b -> object.
  Morphism map;
  // Generator index of each summand of `object`.
  std::vector<std::size_t> summand_generators;
};

// Minimal add(c)-approximation of b.
Approximation minimal_approx(const Representation& b, const Subcategory& c, ApproxSide side);

}  // namespace hearts::homkit
