#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hearts/heart/heart.hpp"

namespace hearts::heart {

struct NamedSes {
  Ses ses;
  std::string label;  // e.g. "2/3 -> 1/2/3 (+) 3"
};

// Seeded conflations A -> E -> E/A with A drawn from `objects` and E a sum
// of one or two of them.
std::vector<NamedSes> random_conflations(const std::vector<Representation>& objects,
                                         const std::vector<std::string>& names, std::size_t count,
                                         std::uint64_t seed);

// A random mono A -> E, or nothing after 64 attempts.
std::optional<Morphism> random_mono(const Representation& a, const Representation& e, std::uint64_t seed);

// Short exact sequences in the heart: f mono, g epi, exact in the middle.
struct HeartSes {
  Morphism f, g;
  std::string label;
};

// For every Hom-basis morphism mu between heart objects that is nonzero in the
// heart: Ker mu -> B -> Im mu and Im mu -> C -> Coker mu.
std::vector<HeartSes> heart_sequences(PairEngine& engine, const std::vector<Representation>& heart_objects,
                                      const std::vector<std::string>& names);

}  // namespace hearts::heart
