#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hearts/homkit/catalog.hpp"
#include "hearts/homkit/subcategory.hpp"
#include "hearts/quiver/algebra.hpp"

namespace hearts::cli {

struct ModuleEntry {
  std::string name;
  quiver::Representation module;
  nlohmann::json source;  // as written, for serialization
};

struct SubcategoryEntry {
  std::string name;
  std::vector<std::string> generators;
};

struct PairEntry {
  std::string name, u, v;
};

struct TwinEntry {
  std::string name, first, second;
};

// A self-contained problem description: algebra, named modules, named
// subcategories and the pairs built from them.
class Workspace {
 public:
  static Workspace from_json(const nlohmann::json& j);
  static Workspace load(const std::string& path);
  nlohmann::json to_json() const;

  la::Scalar prime() const { return prime_; }
  const quiver::AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<ModuleEntry>& modules() const { return modules_; }
  const std::vector<SubcategoryEntry>& subcategories() const { return subcats_; }
  const std::vector<PairEntry>& pairs() const { return pairs_; }
  const std::vector<TwinEntry>& twins() const { return twins_; }
  const nlohmann::json& expected() const { return expected_; }

  const quiver::Representation& module(const std::string& name) const;
  bool has_module(const std::string& name) const;
  // Subcategory objects are built once so cache identities stay stable.
  const homkit::Subcategory& subcategory(const std::string& name) const;
  const PairEntry& pair(const std::string& name) const;
  const homkit::Catalog& catalog() const;
  const std::vector<std::string>& catalog_names() const { return catalog_names_; }

 private:
  la::Scalar prime_ = 101;
  nlohmann::json quiver_json_, relations_json_, expected_;
  quiver::AlgebraPtr algebra_;
  std::vector<ModuleEntry> modules_;
  std::vector<std::string> catalog_names_;
  std::vector<SubcategoryEntry> subcats_;
  std::vector<PairEntry> pairs_;
  std::vector<TwinEntry> twins_;
  std::map<std::string, homkit::Subcategory> built_;
  std::shared_ptr<const homkit::Catalog> catalog_;
};

}  // namespace hearts::cli
