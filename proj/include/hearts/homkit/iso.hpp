#pragma once

#include <cstdint>
#include <optional>

#include "hearts/homkit/subcategory.hpp"

namespace hearts::homkit {

// An isomorphism x -> y found by seeded random search over Hom(x, y), with
// exhaustive enumeration when the Hom space is tiny.
std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y);
bool is_isomorphic(const Representation& x, const Representation& y);

// Endomorphism ring local: End = k.1 + N with N a nilpotent subalgebra.
bool is_indecomposable(const Representation& m);

// g with g f = id and f g = id modulo maps through add(c).
std::optional<Morphism> stable_inverse(const Morphism& f, const Subcategory& c);
bool is_stable_iso(const Morphism& f, const Subcategory& c);
std::optional<Morphism> find_stable_isomorphism(const Representation& x, const Representation& y, const Subcategory& c);
bool stably_isomorphic(const Representation& x, const Representation& y, const Subcategory& c);

// Deterministic generator seeded from the content of the objects involved.
std::uint64_t content_seed(const Representation& x, const Representation& y);

}  // namespace hearts::homkit
