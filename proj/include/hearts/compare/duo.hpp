#pragma once

#include <string>
#include <vector>

#include "hearts/cotorsion/engine.hpp"
#include "hearts/heart/sequences.hpp"
#include "hearts/homkit/catalog.hpp"

namespace hearts::compare {

using cotorsion::PairEngine;
using quiver::Morphism;
using quiver::Representation;

// Named objects of the ambient category, usually a workspace catalog.
struct ObjectSet {
  const homkit::Catalog* catalog = nullptr;
  std::vector<Representation> objects;
  std::vector<std::string> names;

  static ObjectSet from_catalog(const homkit::Catalog& c, const std::vector<std::string>& names);
  // Summand names of x modulo `drop`, joined by " + ", or "0".
  std::string describe(const Representation& x, const homkit::Subcategory& drop) const;
};

// Two pairs on one algebra. The functor from the first heart to the second
// is the second H restricted to the first heart; it is only offered when H
// of the second pair kills the first W.
struct PairDuo {
  PairEngine* first = nullptr;
  PairEngine* second = nullptr;
  bool w1_condition = false;
};

PairDuo duo(PairEngine& first, PairEngine& second);

Representation beta(const PairDuo& d, const Representation& x);
Morphism beta(const PairDuo& d, const Morphism& f);

// Nonzero heart objects of `engine` among the set, with their names.
ObjectSet heart_fixtures(PairEngine& engine, const ObjectSet& all);

// Maps between first-heart objects that factor through the first W go to
// zero, and stable-equal maps go to stable-equal maps.
bool beta_well_defined(const PairDuo& d, const ObjectSet& first_heart);

struct Lemma51 {
  bool lhs = true;  // H of the second pair's generators vanishes under the first
  bool rhs = true;  // the same generators lie in add(u1 * v1) by the oracle
  std::vector<std::string> lhs_failures, rhs_failures;
  bool agree() const { return lhs == rhs; }
};

Lemma51 lemma51_check(const PairDuo& d, std::size_t oracle_cap = 2);

// add(u1 * v1) inside add(u2 * v2), decided through H of the second pair.
bool star_inclusion(PairEngine& first, PairEngine& second);

struct SesOutcome {
  std::string label;
  std::string terms;  // "A -> B -> C" by catalog names modulo the first W
  bool half_exact = true, mono = true, epi = true;
};

struct ExactnessReport {
  bool hypothesis = false;  // add(u1 * v1) inside add(u2 * v2)
  std::size_t sampled = 0;
  bool half_exact = true;
  bool exact = true;
  std::vector<SesOutcome> failures;
  // Passes when half exact everywhere, and exact too under the hypothesis.
  bool ok() const { return half_exact && (!hypothesis || exact); }
};

// Short exact sequences of the first heart built from kernels, images and
// cokernels of Hom-basis maps between its fixture objects.
std::vector<heart::HeartSes> heart_sample(PairEngine& engine, const ObjectSet& heart);

ExactnessReport beta_exactness(const PairDuo& d, const std::vector<heart::HeartSes>& sample, const ObjectSet& all);

struct SerreReport {
  bool hypothesis = false;
  std::vector<std::string> members;  // first-heart fixtures killed by the second H
  bool closed = true;
  std::vector<std::string> violations;
  std::size_t oracle_disagreements = 0;
  bool ok() const { return hypothesis && closed && oracle_disagreements == 0; }
};

SerreReport serre_check(const PairDuo& d, const ObjectSet& first_heart, const std::vector<heart::HeartSes>& sample,
                        const ObjectSet& all);

struct Prop53Report {
  bool hypothesis = false;  // W1 inside add(u2 * v2) inside add(u1 * v1)
  bool invertible = true;
  bool natural = true;
  std::vector<std::string> failures;
  bool ok() const { return hypothesis && invertible && natural; }
};

// The comparison map from each first-heart object B to its image under the
// round trip through the second heart, built from the second pair's
// reflection data, checked for invertibility and naturality.
Prop53Report prop53_check(const PairDuo& d, const ObjectSet& first_heart);

struct KernelRecord {
  std::string name;
  bool killed = false;    // zero under the other H
  bool in_star = false;   // in add(u * v) of the other pair by the oracle
};

// For each object of one heart: killed by the other pair's H iff it lies in
// add(u * v) of that pair.
std::vector<KernelRecord> kernel_characterization(PairEngine& other, const ObjectSet& heart, std::size_t oracle_cap = 2);

struct HeartMatch {
  bool matched = false;
  std::vector<std::pair<std::string, std::string>> bijection;
};

// Bijection between nonzero heart classes preserving every stable Hom
// dimension, by exhaustive permutation search.
HeartMatch match_hearts(PairEngine& a, const ObjectSet& heart_a, PairEngine& b, const ObjectSet& heart_b);

}  // namespace hearts::compare
