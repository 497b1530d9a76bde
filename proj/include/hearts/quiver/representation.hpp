#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hearts/la/mat.hpp"
#include "hearts/quiver/algebra.hpp"

namespace hearts::quiver {

// Finite dimensional module given by a vector space at each vertex and a
// matrix of shape dims[target] x dims[source] for every arrow. Immutable and
// cheap to copy.
class Representation {
 public:
  Representation() = default;
  // Checks shapes only; see validate_module for the relations.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<la::Mat> arrow_maps);

  static Representation zero(AlgebraPtr alg);

  const Algebra& algebra() const { return *data_->alg; }
  const AlgebraPtr& algebra_ptr() const { return data_->alg; }
  const la::Field& field() const { return data_->alg->field(); }
  std::size_t vertex_count() const { return data_->dims.size(); }
  const std::vector<std::size_t>& dims() const { return data_->dims; }
  std::size_t dim(std::size_t v) const { return data_->dims[v]; }
  std::size_t total_dim() const { return data_->total; }
  bool is_zero() const { return data_->total == 0; }
  const la::Mat& arrow_map(std::size_t a) const { return data_->maps[a]; }
  const std::vector<la::Mat>& arrow_maps() const { return data_->maps; }
  // Byte string identifying the representation exactly (dims and entries).
  const std::string& key() const { return data_->key; }
  bool valid() const { return static_cast<bool>(data_); }

  bool operator==(const Representation& o) const { return data_ == o.data_ || key() == o.key(); }

  // Composite of arrow maps along a path (traversal order).
  la::Mat path_action(const Path& p) const;

 private:
  struct Data {
    AlgebraPtr alg;
    std::vector<std::size_t> dims;
    std::vector<la::Mat> maps;
    std::size_t total = 0;
    std::string key;
  };
  std::shared_ptr<const Data> data_;
};

// Throws InvalidModule when some relation does not act as zero.
Representation validate_module(const Representation& m);
bool satisfies_relations(const Representation& m);

class Morphism {
 public:
  Morphism() = default;
  // Checks shapes only; see validate_morphism for the commuting squares.
  Morphism(Representation source, Representation target, std::vector<la::Mat> maps);

  static Morphism zero(const Representation& source, const Representation& target);
  static Morphism identity(const Representation& x);
  // Inverse of flatten().
  static Morphism from_flat(const Representation& source, const Representation& target, const la::Vec& flat);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const la::Mat& map(std::size_t v) const { return maps_[v]; }
  const std::vector<la::Mat>& maps() const { return maps_; }

  bool commutes() const;
  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;

  // Vertex matrices concatenated row-major in vertex order.
  la::Vec flatten() const;
  static std::size_t flat_size(const Representation& source, const Representation& target);

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(la::Scalar c) const;
  bool operator==(const Morphism& o) const;
  bool operator!=(const Morphism& o) const { return !(*this == o); }

 private:
  Representation source_, target_;
  std::vector<la::Mat> maps_;
};

// g after f
Morphism compose(const Morphism& g, const Morphism& f);
inline Morphism operator*(const Morphism& g, const Morphism& f) { return compose(g, f); }

Morphism validate_morphism(const Morphism& f);

// A short exact sequence A -f-> B -g-> C.
struct Ses {
  Morphism f, g;
  const Representation& left() const { return f.source(); }
  const Representation& middle() const { return f.target(); }
  const Representation& right() const { return g.target(); }
};

// Throws NotMono, NotEpi or NotExact (homology at the middle nonzero).
Ses validate_ses(const Morphism& f, const Morphism& g);

}  // namespace hearts::quiver
