#pragma once

#include "hearts/cotorsion/engine.hpp"

namespace hearts::heart {

using cotorsion::PairEngine;
using quiver::Morphism;
using quiver::Representation;
using quiver::Ses;

enum class KcSide { Kernel, Cokernel };

struct HeartKc {
  Representation raw;   // K_g (pullback) or C_g (pushout)
  Morphism raw_map;     // K_g -> source, or target -> C_g
  Representation object;  // the heart object
  Morphism map;           // object -> source, or target -> object
};

// Kernel or cokernel in the heart of a morphism between heart objects.
HeartKc heart_kc(PairEngine& engine, const Morphism& mu, KcSide side);

struct MonoEpi {
  bool mono = false, epi = false;            // kernel / cokernel vanish in the heart
  bool mono_class = false, epi_class = false;  // K_g in add(v) / C_g in add(u)
  bool consistent() const { return mono == mono_class && epi == epi_class; }
};

MonoEpi heart_mono_epi(PairEngine& engine, const Morphism& mu);

// Exactness at target(phi) of heart morphisms phi, psi.
bool exact_at(PairEngine& engine, const Morphism& phi, const Morphism& psi);

// H applied to f and g, then exactness in the middle.
bool verify_half_exact(PairEngine& engine, const Ses& ses);

// Image of mu as the kernel of its cokernel: (Im, B -> Im, Im -> C).
struct HeartImage {
  Representation object;
  Morphism coimage;  // source -> object
  Morphism image;    // object -> target
};
HeartImage heart_image(PairEngine& engine, const Morphism& mu);

// Heart objects among `candidates` that are not zero in the heart.
std::vector<std::size_t> heart_members(PairEngine& engine, const std::vector<Representation>& candidates);

}  // namespace hearts::heart
