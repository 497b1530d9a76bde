#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hearts/quiver/representation.hpp"

namespace hearts::homkit {

using quiver::Morphism;
using quiver::Representation;

struct HomBasis {
  Representation source, target;
  std::vector<Morphism> basis;
  la::Mat flat;  // column j is basis[j].flatten()

  std::size_t dim() const { return basis.size(); }
  std::optional<la::Vec> coordinates(const Morphism& f) const;
  Morphism combine(const la::Vec& coeffs) const;
};

using HomPtr = std::shared_ptr<const HomBasis>;

// Canonical RREF basis of the solution space of the commuting squares.
// Results are memoized by the exact content of both objects.
HomPtr hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

std::size_t hom_cache_size();
void clear_hom_cache();

class Subcategory;

// g : source(f) -> source(t) with t g = f, modulo maps factoring through
// `modulo` when given.
std::optional<Morphism> solve_post(const Morphism& f, const Morphism& t, const Subcategory* modulo = nullptr);
// g : target(t) -> target(f) with g t = f, modulo `modulo` when given.
std::optional<Morphism> solve_pre(const Morphism& f, const Morphism& t, const Subcategory* modulo = nullptr);

enum class FactorSide { LiftEpi, ExtendMono };

// LiftEpi: `through` is epi onto target(f); returns g with through g = f.
// ExtendMono: `through` is mono out of source(f); returns g with g through = f.
std::optional<Morphism> solve_factorization(const Morphism& f, const Morphism& through, FactorSide side);

}  // namespace hearts::homkit
