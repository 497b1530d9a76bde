#pragma once

#include "hearts/cotorsion/engine.hpp"

namespace hearts::cotorsion {

enum class ReflectionSide { Reflection, Coreflection };

struct ReflectionReport {
  bool ok = true;
  bool end_in_class = false;     // U in add(u), resp. V in add(v)
  bool middle_in_side = false;   // Z in B+, resp. K in B-
  bool connecting_factors = false;
  bool matches_construction = false;  // Z stably isomorphic to B+ (resp. K to B-)
  std::string detail;
};

// Reflection: seq is B -> Z -> U. Coreflection: seq is V -> K -> B.
ReflectionReport verify_reflection(PairEngine& engine, const Ses& seq, ReflectionSide side);

struct EtaReport {
  Morphism eta;           // (B-)+ -> (B+)-
  bool iso = false;
  bool routes_agree = false;  // composite through the pullback vs direct solution
  bool q_in_heart = false;
  std::size_t naturality_checked = 0;
  std::size_t naturality_failed = 0;
  bool ok() const { return iso && routes_agree && q_in_heart && naturality_failed == 0; }
};

// Comparison map between the two composites at b, with naturality tested on
// a Hom basis from b to each partner.
EtaReport eta_check(PairEngine& engine, const Representation& b, const std::vector<Representation>& partners);

// The comparison map alone, from the defining identities modulo W.
Morphism eta_direct(PairEngine& engine, const Representation& b);

}  // namespace hearts::cotorsion
