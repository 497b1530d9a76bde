#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hearts/homkit/hom.hpp"

namespace hearts::homkit {

// add of finitely many indecomposable generators.
class Subcategory {
 public:
  Subcategory() = default;
  Subcategory(std::string name, std::vector<Representation> generators, std::vector<std::string> generator_names = {});

  const std::string& name() const { return name_; }
  const std::vector<Representation>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t size() const { return gens_.size(); }
  // Identifies this generator list in caches; copies share it.
  std::uint64_t id() const { return id_; }

 private:
  std::string name_;
  std::vector<Representation> gens_;
  std::vector<std::string> names_;
  std::uint64_t id_ = 0;
};

// Throws InvalidSubcategory when a generator has a non-local endomorphism ring
// or violates the relations.
void validate_subcategory(const Subcategory& c);

// Maps x -> y factoring through add(c), as a subspace of flattened morphisms.
std::shared_ptr<const la::Subspace> ideal_span(const Representation& x, const Representation& y, const Subcategory& c);

bool in_add(const Representation& x, const Subcategory& c);
bool factors_through(const Morphism& f, const Subcategory& c);
bool stable_equal(const Morphism& f, const Morphism& g, const Subcategory& c);
std::size_t stable_hom_dim(const Representation& x, const Representation& y, const Subcategory& c);
// Basis of Hom(x, y) reduced modulo maps through add(c): representatives
// whose classes form a basis of the quotient.
std::vector<Morphism> stable_hom_basis(const Representation& x, const Representation& y, const Subcategory& c);

}  // namespace hearts::homkit
