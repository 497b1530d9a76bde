#pragma once

#include <vector>

#include "hearts/homkit/hom.hpp"
#include "hearts/quiver/constructions.hpp"

namespace hearts::homkit {

enum class ResolveKind { Projective, Injective };

// Minimal projective cover P -> m with kernel omega (syzygy), or minimal
// injective envelope m -> I with cokernel omega (cosyzygy).
struct Cover {
  Morphism map;        // P -> m, or m -> I
  Morphism omega_map;  // omega -> P, or I -> omega
  std::vector<std::size_t> vertices;  // vertex of each indecomposable summand
};

Cover projective_cover(const Representation& m);
Cover injective_envelope(const Representation& m);
// Cover by the sum of P(v)^dim m_v, every basis vector hit once.
Cover canonical_projective_cover(const Representation& m);

Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);
// Maps induced on syzygies and cosyzygies by lifting through the covers.
Morphism syzygy_map(const Morphism& f);
Morphism cosyzygy_map(const Morphism& f);

struct Resolution {
  ResolveKind kind;
  std::vector<Cover> steps;  // step k covers the k-th syzygy (or cosyzygy)
};

Resolution resolve(const Representation& m, ResolveKind kind, std::size_t depth);

// Ext^1(x, y) as Hom(omega x, y) modulo maps extending over the cover.
class ExtSpace {
 public:
  ExtSpace(const Representation& x, const Representation& y, bool minimal_cover = true);

  std::size_t dim() const { return reps_.size(); }
  const Cover& cover() const { return cover_; }
  // Cocycle omega x -> y representing the i-th basis class.
  const Morphism& representative(std::size_t i) const { return reps_[i]; }
  la::Vec coordinates(const Morphism& cocycle) const;
  Morphism cocycle(const la::Vec& coords) const;
  // The extension y >-> e ->> x of a class, as (f, g).
  quiver::Ses extension(const la::Vec& coords) const;

 private:
  Representation x_, y_;
  Cover cover_;
  la::Subspace boundaries_;
  la::Subspace classes_;  // residual representatives, echelon form
  std::vector<Morphism> reps_;
};

std::size_t ext1_dim(const Representation& x, const Representation& y);
std::size_t ext1_dim_canonical(const Representation& x, const Representation& y);

}  // namespace hearts::homkit
