#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hearts/homkit/subcategory.hpp"

namespace hearts::homkit {

// A complete list of pairwise non-isomorphic indecomposables, used to split
// arbitrary modules into named summands from Hom dimensions alone.
class Catalog {
 public:
  Catalog() = default;
  Catalog(std::vector<std::string> names, std::vector<Representation> modules);

  std::size_t size() const { return modules_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Representation>& modules() const { return modules_; }
  const Representation& at(const std::string& name) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Multiplicity of each catalog member as a summand of x. Throws when the
  // Hom dimension system has no non-negative integer solution.
  std::vector<std::size_t> decompose(const Representation& x) const;
  // Names of the summands of x, with W-summands dropped when c is given.
  std::vector<std::string> summand_names(const Representation& x, const Subcategory* drop = nullptr) const;
  // Index of the member isomorphic to x, when x is indecomposable.
  std::optional<std::size_t> identify(const Representation& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<Representation> modules_;
  std::vector<std::vector<long double>> inverse_;  // of [dim Hom(M_j, M_i)]
};

}  // namespace hearts::homkit
