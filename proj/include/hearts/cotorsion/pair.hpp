#pragma once

#include <string>
#include <vector>

#include "hearts/homkit/approx.hpp"
#include "hearts/homkit/subcategory.hpp"
#include "hearts/quiver/representation.hpp"

namespace hearts::cotorsion {

using homkit::Subcategory;
using quiver::Morphism;
using quiver::Representation;
using quiver::Ses;

struct CotorsionPair {
  std::string name;
  Subcategory u, v;
  Subcategory w;  // generators of u lying in add(v)
};

struct CheckRecord {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct PairCertificate {
  CotorsionPair pair;
  std::vector<CheckRecord> checks;
  bool ok() const;
};

// Runs every certification check and records the outcome of each.
PairCertificate certify_pair(const std::string& name, const Subcategory& u, const Subcategory& v,
                             const std::vector<Representation>& testset);

// Throws InvalidPair naming the first failed check.
CotorsionPair verify_pair(const std::string& name, const Subcategory& u, const Subcategory& v,
                          const std::vector<Representation>& testset);

// Pair built without certification, for callers that already hold a certificate.
CotorsionPair make_pair(const std::string& name, const Subcategory& u, const Subcategory& v);

enum class SeqSide { Epi, Mono };

struct SpecialSeq {
  Ses ses;
  // Epi: V_B -> U_B -> B, generator index (in u) of each summand of U_B.
  // Mono: B -> V^B -> U^B, generator index (in v) of each summand of V^B.
  std::vector<std::size_t> generators;
};

// Minimal approximation sequence. Throws ConstructionFailed when the
// end term falls outside the required class.
SpecialSeq special_seq(const CotorsionPair& pair, const Representation& b, SeqSide side);

// Whether every extension between generators of c (basis classes and their
// sum) has its middle term in add(c).
CheckRecord extension_closed(const Subcategory& c);

}  // namespace hearts::cotorsion
