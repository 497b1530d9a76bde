#pragma once

#include <vector>

#include "hearts/quiver/representation.hpp"

namespace hearts::quiver {

struct DirectSum {
  Representation object;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& parts);
Representation direct_sum_object(const AlgebraPtr& alg, const std::vector<Representation>& parts);
// Morphism between sums given by a block matrix of component maps:
// blocks[i][j] : sources[j] -> targets[i].
Morphism block_morphism(const DirectSum& source, const DirectSum& target,
                        const std::vector<std::vector<Morphism>>& blocks);

struct Kernel {
  Morphism inclusion;
  std::vector<la::Mat> retraction;  // left inverse of the inclusion at each vertex
  // h : X -> source(f) with f h = 0, factored through the kernel.
  Morphism lift(const Morphism& h) const;
};

struct Cokernel {
  Morphism projection;
  std::vector<la::Mat> section;  // right inverse of the projection at each vertex
  // h : target(f) -> Y vanishing on the image, factored through the cokernel.
  Morphism descend(const Morphism& h) const;
};

Kernel kernel(const Morphism& f);
Cokernel cokernel(const Morphism& f);

struct Factorization {
  Kernel kernel;
  Morphism coimage;  // source -> image, epi
  Morphism image;    // image -> target, mono
  Cokernel cokernel;
};

Factorization factorize(const Morphism& f);

enum class SquareMode { Pushout, Pullback };

// Pushout of B <-f- A -g-> C: corner D with maps to_corner_b : B -> D and
// to_corner_c : C -> D. Pullback of B -f-> D <-g- C: corner A with maps
// from_corner_b : A -> B and from_corner_c : A -> C.
struct Square {
  Representation corner;
  Morphism to_b;  // corner map involving B
  Morphism to_c;  // corner map involving C
  DirectSum sum;  // B + C
  Cokernel pushout_quotient;  // set for pushouts
  Kernel pullback_inclusion;  // set for pullbacks
  // Pushout: the map D -> Y induced by hb : B -> Y and hc : C -> Y.
  Morphism induced_from(const Morphism& hb, const Morphism& hc) const;
  // Pullback: the map X -> A induced by kb : X -> B and kc : X -> C.
  Morphism induced_to(const Morphism& kb, const Morphism& kc) const;
};

Square pushout(const Morphism& f, const Morphism& g);
Square pullback(const Morphism& f, const Morphism& g);
Square square_complete(const Morphism& f, const Morphism& g, SquareMode mode);

}  // namespace hearts::quiver
