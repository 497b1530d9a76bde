#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hearts/la/mat.hpp"

namespace hearts::quiver {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> arrow_index(const std::string& name) const;
};

// Arrow indices in the order they are traversed. A path of length zero
// stands for the idempotent at `source`.
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> arrows;

  bool operator<(const Path& o) const;
  bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
};

struct RelationTerm {
  long long coefficient;
  std::vector<std::string> arrows;  // traversal order
};

using Relation = std::vector<RelationTerm>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// kQ/I for an admissible ideal I given by generators.
class Algebra {
 public:
  static constexpr std::size_t kDefaultPathCap = 10000;

  // Computes the path basis; throws InvalidAlgebra or PathCapExceeded.
  static AlgebraPtr create(la::Field field, Quiver quiver, std::vector<Relation> relations,
                           std::size_t path_cap = kDefaultPathCap);

  const la::Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  std::size_t vertex_count() const { return quiver_.vertex_count; }
  const std::vector<Relation>& relations() const { return relations_; }

  std::size_t target_of(const Path& p) const;
  // Basis paths from s to t of the quotient.
  const std::vector<Path>& basis(std::size_t s, std::size_t t) const;
  std::size_t dimension() const;
  // Every path of this length lies in the ideal.
  std::size_t nilpotency_bound() const { return bound_; }
  // Coordinates of the class of p in basis(p.source, target_of(p)).
  la::Vec reduce(const Path& p) const;

  struct ResolvedTerm {
    la::Scalar coefficient;
    Path path;
  };
  struct ResolvedRelation {
    std::size_t source, target;
    std::vector<ResolvedTerm> terms;
  };
  const std::vector<ResolvedRelation>& resolved_relations() const { return resolved_; }

 private:
  Algebra(la::Field f, Quiver q, std::vector<Relation> r) : field_(f), quiver_(std::move(q)), relations_(std::move(r)) {}

  la::Field field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<ResolvedRelation> resolved_;
  std::size_t bound_ = 0;
  // per (s, t): basis paths and a reduction table for every enumerated path
  std::vector<std::vector<std::vector<Path>>> basis_;
  std::vector<std::vector<std::map<Path, la::Vec>>> reduction_;
};

}  // namespace hearts::quiver
