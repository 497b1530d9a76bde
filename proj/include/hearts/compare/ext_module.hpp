#pragma once

#include <string>
#include <vector>

#include "hearts/compare/duo.hpp"
#include "hearts/la/mat.hpp"

namespace hearts::compare {

// Right action of a stable map h: M_from -> M_to (modulo projectives) as the
// matrix of Ext1(h, x): Ext1(M_to, x) -> Ext1(M_from, x) in class coordinates.
struct ExtAction {
  std::size_t from = 0, to = 0;
  Morphism map;
  la::Mat matrix;
};

// Ext1(-, x) restricted to the generators of a subcategory containing the
// projectives.
struct ExtModule {
  std::vector<std::string> names;
  std::vector<std::size_t> dims;
  std::vector<ExtAction> actions;
  std::size_t total_dim() const;
  bool zero() const { return total_dim() == 0; }
};

// Throws InvalidSubcategory when some indecomposable projective is missing from m.
ExtModule ext_restriction_module(const homkit::Subcategory& m, const Representation& x);
// The variant for a pair (M, M-perp): evaluates on the minus construction of x.
ExtModule ext_restriction_module(PairEngine& engine, const Representation& x);

// Ext1(h, x) for any map h: a -> b, as a matrix from Ext1(b, x) to Ext1(a, x).
la::Mat ext_pullback_matrix(const Morphism& h, const Representation& x);

struct ClusterTiltingReport {
  bool contains_projectives = true;
  bool rigid = true;
  bool left_char = true;   // X in add(m) iff Ext1(X, m) = 0
  bool right_char = true;  // X in add(m) iff Ext1(m, X) = 0
  std::vector<std::string> failures;
  bool ok() const { return contains_projectives && rigid && left_char && right_char; }
};

ClusterTiltingReport cluster_tilting_check(const homkit::Subcategory& m, const ObjectSet& all);

// Names of the objects X with Ext1(m, X) = 0.
std::vector<std::string> perp_one(const homkit::Subcategory& m, const ObjectSet& all);

}  // namespace hearts::compare
