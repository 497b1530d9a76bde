#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hearts/cli/workspace.hpp"
#include "hearts/cotorsion/engine.hpp"

namespace testing_support {

inline const hearts::cli::Workspace& workspace(const std::string& name) {
  static std::map<std::string, hearts::cli::Workspace> loaded;
  auto it = loaded.find(name);
  if (it == loaded.end())
    it = loaded.emplace(name, hearts::cli::Workspace::load(std::string(HEARTS_FIXTURE_DIR) + "/" + name + ".workspace")).first;
  return it->second;
}

inline hearts::cotorsion::CotorsionPair fixture_pair(const std::string& ws, const std::string& name) {
  const auto& w = workspace(ws);
  const auto& e = w.pair(name);
  return hearts::cotorsion::verify_pair(name, w.subcategory(e.u), w.subcategory(e.v), w.catalog().modules());
}

// Shared engine per fixture pair so constructions are reused across tests.
inline hearts::cotorsion::PairEngine& engine(const std::string& ws, const std::string& name) {
  static std::map<std::string, std::unique_ptr<hearts::cotorsion::PairEngine>> engines;
  auto& slot = engines[ws + "/" + name];
  if (!slot) slot = std::make_unique<hearts::cotorsion::PairEngine>(fixture_pair(ws, name));
  return *slot;
}

inline std::vector<std::pair<std::string, std::string>> all_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* ws : {"a2", "ex61", "ex62"})
    for (const auto& p : workspace(ws).pairs()) out.push_back({ws, p.name});
  return out;
}

}  // namespace testing_support
